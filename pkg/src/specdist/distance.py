"""Spectral distance sigma, its per-residue closed-form sums, and the
interlacing sign patterns between the family pairs.

Pairs are two-letter codes naming (G1, G2): "pz", "wz", "pw", "cz".
The cz pair always compares C_n with Z_n at even order n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError, OrderTooSmallError
from .graphs import Family, FamilySpec
from .spectra import closed_spectrum

PAIRS = ("pz", "wz", "pw", "cz")

EQUALITY_TOL = 1e-12

_PAIR_FAMILIES = {
    "pz": (Family.PATH, Family.Z_TREE),
    "wz": (Family.W_TREE, Family.Z_TREE),
    "pw": (Family.PATH, Family.W_TREE),
    "cz": (Family.CYCLE, Family.Z_TREE),
}

_PAIR_MIN_ORDER = {"pz": 4, "wz": 6, "pw": 6, "cz": 4}


def pair_min_order(pair: str) -> int:
    return _PAIR_MIN_ORDER[pair]


def _check_pair_order(pair, n):
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}")
    minimum = _PAIR_MIN_ORDER[pair]
    if n < minimum:
        raise OrderTooSmallError(f"pair {pair} requires n >= {minimum}")
    if pair == "cz" and n % 2 != 0:
        raise OrderTooSmallError("pair cz requires an even order")


def pair_spectra(pair: str, n: int):
    """Closed-form spectra (G1, G2) for a pair at order n."""
    _check_pair_order(pair, n)
    f1, f2 = _PAIR_FAMILIES[pair]
    return closed_spectrum(FamilySpec(f1, n)), closed_spectrum(FamilySpec(f2, n))


def sigma(a, b) -> float:
    """l1 distance between two spectra after descending sorts."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatchError(f"spectra have lengths {a.size} and {b.size}")
    a = np.sort(a)[::-1]
    b = np.sort(b)[::-1]
    return float(np.sum(np.abs(a - b)))


def sigma_direct(pair: str, n: int) -> float:
    """sigma from the two closed-form spectra, no case analysis."""
    s1, s2 = pair_spectra(pair, n)
    return sigma(s1, s2)


def crossover_index(n: int) -> int:
    """n* for even n: n/4 when n = 0 (mod 4), (n-2)/4 when n = 2 (mod 4)."""
    if n % 4 == 0:
        return n // 4
    if n % 4 == 2:
        return (n - 2) // 4
    raise ValueError(f"crossover index is defined for even n only, got {n}")


def _sum(terms, compensated):
    if compensated:
        return math.fsum(terms)
    return float(np.sum(terms))


def _cos_z(k, n):
    # k-th positive-side Z_n eigenvalue over 2: cos((2k-1) pi / (2n-2))
    return np.cos((2 * k - 1) * math.pi / (2 * n - 2))


def _cos_p(k, n):
    return np.cos(k * math.pi / (n + 1))


def _cos_w(k, n):
    return np.cos((k - 1) * math.pi / (n - 3))


def sigma_closed_pz(n: int, compensated: bool = False) -> float:
    """sigma(P_n, Z_n) via the per-residue-class cosine sums."""
    if n < 4:
        raise OrderTooSmallError("pair pz requires n >= 4")
    r = n % 4
    if r == 1:
        k1_hi, k2_lo, k2_hi = (n - 1) // 4, (n + 3) // 4, (n - 1) // 2
    elif r == 3:
        k1_hi, k2_lo, k2_hi = (n - 3) // 4, (n + 5) // 4, (n - 1) // 2
    else:
        n_star = crossover_index(n)
        k1_hi, k2_lo, k2_hi = n_star, n_star + 1, n // 2
    k1 = np.arange(1, k1_hi + 1)
    k2 = np.arange(k2_lo, k2_hi + 1)
    total = _sum(_cos_z(k1, n) - _cos_p(k1, n), compensated)
    total += _sum(_cos_p(k2, n) - _cos_z(k2, n), compensated)
    return 4.0 * total


def sigma_closed_wz(n: int, compensated: bool = False) -> float:
    """sigma(W_n, Z_n) via the per-residue-class cosine sums."""
    if n < 6:
        raise OrderTooSmallError("pair wz requires n >= 6")
    r = n % 4
    if r == 1:
        k1_hi, k2_lo, k2_hi = (n - 1) // 4, (n + 3) // 4, (n - 1) // 2
    elif r == 3:
        k1_hi, k2_lo, k2_hi = (n - 3) // 4, (n + 5) // 4, (n - 1) // 2
    else:
        n_star = crossover_index(n)
        k1_hi, k2_lo, k2_hi = n_star, n_star + 1, n // 2 - 1
    k1 = np.arange(1, k1_hi + 1)
    k2 = np.arange(k2_lo, k2_hi + 1)
    total = _sum(_cos_w(k1, n) - _cos_z(k1, n), compensated)
    total += _sum(_cos_z(k2, n) - _cos_w(k2, n), compensated)
    return 4.0 * total


def sigma_closed_cz(half_order: int, compensated: bool = False) -> float:
    """sigma(C_{2m}, Z_{2m}) for m = half_order, via the alternating sum."""
    m = half_order
    if m < 2:
        raise OrderTooSmallError("pair cz requires half-order >= 2")
    k = np.arange(1, m)
    terms = ((-1.0) ** k) * np.cos((2 * k - 1) * math.pi / (4 * m - 2))
    return 4.0 + 4.0 * _sum(terms, compensated)


def sigma_closed(pair: str, n: int, compensated: bool = False) -> float:
    """Closed-form sigma for a pair at order n (pw uses additivity)."""
    _check_pair_order(pair, n)
    if pair == "pz":
        return sigma_closed_pz(n, compensated)
    if pair == "wz":
        return sigma_closed_wz(n, compensated)
    if pair == "pw":
        return sigma_closed_pz(n, compensated) + sigma_closed_wz(n, compensated)
    return sigma_closed_cz(n // 2, compensated)


def check_additivity(n: int) -> float:
    """Residual |sigma(P,W) - sigma(P,Z) - sigma(W,Z)| from closed spectra."""
    if n < 6:
        raise OrderTooSmallError("additivity check requires n >= 6")
    return abs(sigma_direct("pw", n) - sigma_direct("pz", n) - sigma_direct("wz", n))


G1_ABOVE = "G1_above"
G2_ABOVE = "G2_above"
EQUAL = "equal"

_CODE_NAMES = {1: G1_ABOVE, -1: G2_ABOVE, 0: EQUAL}


@dataclass(frozen=True)
class DistanceReport:
    """Per-index comparison of a pair's spectra at one order."""

    pair: str
    n: int
    sigma: float
    diffs: tuple[float, ...]
    pattern: tuple[str, ...]
    # verdict against the asserted per-residue pattern; None when no pattern
    # is asserted for the pair (pw)
    matches_proof: bool | None

    def to_json(self) -> str:
        diffs = ",".join(f"{d:.17g}" for d in self.diffs)
        pattern = ",".join(f'"{p}"' for p in self.pattern)
        return (
            f'{{"pair": "{self.pair}", "n": {self.n}, "sigma": {self.sigma:.17g}, '
            f'"diffs": [{diffs}], "pattern": [{pattern}]}}'
        )


def expected_pattern_codes(pair: str, n: int) -> np.ndarray:
    """Sign pattern of lambda_k(G1) - lambda_k(G2) asserted by the case
    analysis: +1 G1 above, -1 G2 above, 0 equal.  Lower half mirrors the
    upper half with flipped sign (bipartite symmetry)."""
    _check_pair_order(pair, n)
    codes = np.zeros(n, dtype=np.int8)

    if pair == "cz":
        half = n // 2
        idx = np.arange(1, n + 1)
        codes[:] = np.where(idx % 2 == 1, 1, -1)
        if half % 2 == 0:
            codes[half - 1] = 0
            codes[half] = 0
        return codes

    if pair not in ("pz", "wz"):
        raise ValueError(f"no asserted pattern for pair {pair!r}")

    first = -1 if pair == "pz" else 1  # pz: Z (G2) dominates low indices
    r = n % 4
    equal_ks = []
    if r == 1:
        k1_hi, k2_lo, k2_hi = (n - 1) // 4, (n + 3) // 4, (n - 1) // 2
        equal_ks = [(n + 1) // 2]
    elif r == 3:
        k1_hi, k2_lo, k2_hi = (n - 3) // 4, (n + 5) // 4, (n - 1) // 2
        equal_ks = [(n + 1) // 4, (n + 1) // 2]
    else:
        n_star = crossover_index(n)
        k1_hi, k2_lo = n_star, n_star + 1
        if pair == "pz":
            k2_hi = n // 2
        else:
            k2_hi = n // 2 - 1
            equal_ks = [n // 2]
    for k in range(1, k1_hi + 1):
        codes[k - 1] = first
    for k in range(k2_lo, k2_hi + 1):
        codes[k - 1] = -first
    for k in equal_ks:
        codes[k - 1] = 0
    for j in range(n // 2):
        codes[n - 1 - j] = -codes[j]
    return codes


def distance_report(pair: str, n: int) -> DistanceReport:
    """Per-index diffs and observed sign pattern for any pair at order n."""
    s1, s2 = pair_spectra(pair, n)
    diffs = s1 - s2
    observed = np.where(
        np.abs(diffs) < EQUALITY_TOL, 0, np.where(diffs > 0, 1, -1)
    ).astype(np.int8)
    if pair == "pw":
        verdict = None
    else:
        verdict = bool(np.array_equal(observed, expected_pattern_codes(pair, n)))
    return DistanceReport(
        pair=pair,
        n=n,
        sigma=float(np.sum(np.abs(diffs))),
        diffs=tuple(float(d) for d in diffs),
        pattern=tuple(_CODE_NAMES[int(c)] for c in observed),
        matches_proof=verdict,
    )


def interlace_pattern(pair: str, n: int) -> DistanceReport:
    """Observed sign pattern at order n, with a verdict against the
    asserted per-residue pattern (pairs pz, wz and cz only)."""
    if pair == "pw":
        raise ValueError("no asserted interlacing pattern for pair pw")
    return distance_report(pair, n)


def pattern_sigma(report: DistanceReport) -> float:
    """Recompute sigma from the upper half of the diffs, doubled by
    bipartite symmetry (plus the middle term at odd order)."""
    diffs = np.abs(np.asarray(report.diffs))
    n = report.n
    total = 2.0 * float(np.sum(diffs[: n // 2]))
    if n % 2 == 1:
        total += float(diffs[n // 2])
    return total
