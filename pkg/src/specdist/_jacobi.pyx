# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi sweeps for dense symmetric matrices (compiled kernel).

Modifies its input buffer in place; callers pass a scratch copy.
"""

from libc.math cimport fabs, sqrt


def jacobi_sweeps(double[:, ::1] a, int max_sweeps, double tol):
    """Run cyclic Jacobi rotations until the off-diagonal Frobenius norm
    drops below ``tol``.  Returns (converged, sweeps_used); eigenvalues are
    left on the diagonal of ``a``.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i, sweep
    cdef double off, apq, app, aqq, theta, t, c, s, aip, aiq
    cdef double skip = 0.1 * tol / n

    if n == 1:
        return True, 0

    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        off = sqrt(off)
        if off < tol:
            return True, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                    a[p, i] = a[i, p]
                    a[q, i] = a[i, q]

    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * a[p, q] * a[p, q]
    return sqrt(off) < tol, max_sweeps
