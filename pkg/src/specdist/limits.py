"""Limit scans of the sigma sequences along residue classes mod 4.

Every scan point is a closed-form cosine sum (O(n)), so grids up to 1e5-1e6
are cheap; the dense eigensolver never enters here.  Limits are estimated by
first-order Richardson extrapolation on an approximately doubling grid.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

from .distance import pair_min_order, sigma_closed, PAIRS
from .errors import (
    InsufficientSamplesError,
    OrderTooSmallError,
    ResidueMismatchError,
)

# (8 - 8*sqrt(2) + 2*pi) / pi, the shared limit of the pz and wz sequences.
L_STAR = (8.0 - 8.0 * math.sqrt(2.0) + 2.0 * math.pi) / math.pi

_TARGETS = {"pz": L_STAR, "wz": L_STAR, "pw": 2.0 * L_STAR, "cz": 2.0}

DEFAULT_N_MAX = 100_000

# Extrapolation treats the last two samples as an n-doubling step when their
# ratio is within this window of 2 (residue-preserving grids only double
# approximately).
_DOUBLING_WINDOW = (1.7, 2.3)


def target_constant(pair: str) -> float:
    """The proven limit of the pair's sigma sequence."""
    if pair not in _TARGETS:
        raise ValueError(f"unknown pair {pair!r}")
    return _TARGETS[pair]


def alternating_sum(n: int, compensated: bool = False) -> float:
    """sum_{k=1}^{n-1} (-1)^k cos((2k-1) pi / (4n-2)); tends to -1/2."""
    if n < 2:
        raise OrderTooSmallError("alternating sum requires n >= 2")
    terms = (
        ((-1.0) ** k) * math.cos((2 * k - 1) * math.pi / (4 * n - 2))
        for k in range(1, n)
    )
    if compensated:
        return math.fsum(terms)
    return sum(terms)


def richardson_extrapolate(samples) -> float:
    """First-order Richardson step on the last doubling pair.

    Assumes error ~ c/n: from (n, v_n) and (2n, v_2n) the extrapolant is
    2*v_2n - v_n.  Falls back to the last value when the final spacing is
    not approximately 2x.
    """
    samples = list(samples)
    if len(samples) < 3:
        raise InsufficientSamplesError("extrapolation needs at least 3 samples")
    ns = [n for n, _ in samples]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("sample orders must be strictly increasing")
    (n1, v1), (n2, v2) = samples[-2], samples[-1]
    ratio = n2 / n1
    if _DOUBLING_WINDOW[0] <= ratio <= _DOUBLING_WINDOW[1]:
        return 2.0 * v2 - v1
    return v2


def _min_order(pair: str, residue) -> int:
    base = pair_min_order(pair)
    if pair == "cz":
        return base
    n = base
    while n % 4 != residue:
        n += 1
    return n


def default_grid(pair: str, residue=None, n_max: int = DEFAULT_N_MAX) -> list[int]:
    """Approximately doubling grid staying inside the residue class.

    For cz the grid is exact doubling over even orders; residue is ignored.
    """
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}")
    if pair != "cz":
        if residue not in (0, 1, 2, 3):
            raise ValueError(f"residue must be 0..3, got {residue!r}")
    start = _min_order(pair, residue)
    if start > n_max:
        raise ValueError(f"n_max {n_max} below the smallest valid order {start}")
    grid = [start]
    while True:
        nxt = 2 * grid[-1]
        if pair != "cz":
            nxt += (residue - nxt) % 4
        if nxt > n_max:
            break
        grid.append(nxt)
    return grid


@dataclass(frozen=True)
class LimitEstimate:
    """A sampled sigma sequence with its extrapolated limit."""

    pair: str
    residue: int | None
    samples: tuple[tuple[int, float], ...]
    extrapolated: float
    target: float
    abs_error: float

    def to_json(self) -> str:
        residue = "null" if self.residue is None else str(self.residue)
        samples = ",".join(f"[{n},{v:.17g}]" for n, v in self.samples)
        return (
            f'{{"pair": "{self.pair}", "residue": {residue}, '
            f'"samples": [{samples}], "extrapolated": {self.extrapolated:.17g}, '
            f'"target": {self.target:.17g}, "abs_error": {self.abs_error:.17g}}}'
        )

    def to_csv(self) -> str:
        """Scan CSV: pair,residue,n,sigma,target,abs_error per sample row."""
        residue = "" if self.residue is None else str(self.residue)
        buf = io.StringIO()
        buf.write("pair,residue,n,sigma,target,abs_error\n")
        for n, v in self.samples:
            buf.write(
                f"{self.pair},{residue},{n},{v:.17g},{self.target:.17g},"
                f"{abs(v - self.target):.17g}\n"
            )
        return buf.getvalue()


def sequence_scan(
    pair: str,
    residue=None,
    n_values=None,
    n_max: int = DEFAULT_N_MAX,
    compensated: bool = False,
) -> LimitEstimate:
    """Evaluate the closed-form sigma along a residue-class grid and
    extrapolate the limit.  residue is required for pz/wz/pw, ignored for cz."""
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}")
    if pair == "cz":
        residue = None
    if n_values is None:
        n_values = default_grid(pair, residue, n_max)
    else:
        n_values = list(n_values)
        if any(b <= a for a, b in zip(n_values, n_values[1:])):
            raise ValueError("n_values must be strictly increasing")
        minimum = pair_min_order(pair)
        for n in n_values:
            if n < minimum:
                raise OrderTooSmallError(f"pair {pair} requires n >= {minimum}")
            if pair == "cz":
                if n % 2 != 0:
                    raise ResidueMismatchError(f"pair cz requires even n, got {n}")
            elif n % 4 != residue:
                raise ResidueMismatchError(
                    f"n={n} is not {residue} (mod 4)"
                )
    samples = tuple((n, sigma_closed(pair, n, compensated)) for n in n_values)
    extrapolated = richardson_extrapolate(samples)
    target = target_constant(pair)
    return LimitEstimate(
        pair=pair,
        residue=residue,
        samples=samples,
        extrapolated=extrapolated,
        target=target,
        abs_error=abs(extrapolated - target),
    )
