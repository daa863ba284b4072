"""Adjacency spectra of the four families, two independent ways.

Closed forms (cosine expressions per family) and the Jacobi eigensolver act
as mutual oracles; spectrum_deviation measures their sup-norm disagreement.
"""

import io
import math

import numpy as np

from .errors import LengthMismatchError, OrderTooSmallError
from .eigensolver import symmetric_eigenvalues
from .graphs import Family, FamilySpec


def path_eigenvalues(n):
    # 2 cos(k pi / (n+1)), k = 1..n; already descending.
    k = np.arange(1, n + 1)
    return 2.0 * np.cos(k * math.pi / (n + 1))


def cycle_eigenvalues(n):
    # 2 cos(2 k pi / n), k = 1..n.
    k = np.arange(1, n + 1)
    return 2.0 * np.cos(2.0 * k * math.pi / n)


def z_eigenvalues(n):
    # 0 together with 2 cos((2k-1) pi / (2n-2)), k = 1..n-1.
    k = np.arange(1, n)
    return np.concatenate(([0.0], 2.0 * np.cos((2 * k - 1) * math.pi / (2 * n - 2))))


def w_eigenvalues(n):
    # {2, 0, 0, -2} together with 2 cos(k pi / (n-3)), k = 1..n-4.
    k = np.arange(1, n - 3)
    return np.concatenate(([2.0, 0.0, 0.0, -2.0], 2.0 * np.cos(k * math.pi / (n - 3))))


_CLOSED_FORMS = {
    Family.PATH: path_eigenvalues,
    Family.CYCLE: cycle_eigenvalues,
    Family.Z_TREE: z_eigenvalues,
    Family.W_TREE: w_eigenvalues,
}


def closed_spectrum(spec: FamilySpec) -> np.ndarray:
    """Closed-form eigenvalues of the family member, sorted descending.

    Multiplicities are kept as repeated entries; nothing is collapsed.
    """
    if not isinstance(spec, FamilySpec):
        raise TypeError("closed_spectrum expects a FamilySpec")
    values = _CLOSED_FORMS[spec.family](spec.n)
    return np.sort(values)[::-1].copy()


def numeric_spectrum(m) -> np.ndarray:
    """Eigenvalues of a symmetric matrix via Jacobi sweeps, sorted descending."""
    values = symmetric_eigenvalues(m)
    return np.sort(values)[::-1].copy()


def spectrum_deviation(a, b) -> float:
    """Sup-norm distance between two equal-length spectra."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatchError(f"spectra have lengths {a.size} and {b.size}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def spectrum_to_csv(values) -> str:
    """CSV export with columns index,eigenvalue at 17 significant digits."""
    buf = io.StringIO()
    buf.write("index,eigenvalue\n")
    for i, v in enumerate(np.asarray(values, dtype=float), start=1):
        buf.write(f"{i},{v:.17g}\n")
    return buf.getvalue()
