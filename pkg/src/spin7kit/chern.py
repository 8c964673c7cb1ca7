"""Euler characteristics from Chern classes and branched covers.

For a smooth complete intersection X of multidegree (d_1..d_k) in CP^n the
total Chern class is (1+h)^(n+1) / prod(1 + d_i h), and
chi(X) = (prod d_i) * [h^(n-k)] of that series.  Weighted spaces of the
form CP^n(1, ..., 1, m) are reached through the degree-m cover
[w] -> [w_0, ..., w_{n-1}, w_n^m], branched along w_n = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Sequence

from .errors import InconsistencyError
from .wps import Weights


def euler_ci(n: int, degrees: Sequence[int]) -> int:
    """Topological Euler characteristic of a smooth complete intersection of
    the given degrees in CP^n."""
    degrees = tuple(int(d) for d in degrees)
    k = len(degrees)
    if k > n:
        raise ValueError(f"{k} equations in CP^{n}: dimension would be negative")
    if any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be >= 1: {degrees}")
    top = n - k
    series = [comb(n + 1, i) for i in range(top + 1)]
    for d in degrees:
        # divide by (1 + d h): c_i -= d * c_{i-1}
        for i in range(1, top + 1):
            series[i] -= d * series[i - 1]
    return prod(degrees) * series[top]


def branched_euler(chi_cover: int, chi_branch: int, m: int) -> int:
    """Euler characteristic of the base of a degree-m cover totally branched
    along a locus with Euler characteristic ``chi_branch``:
    chi(F) = (chi(F~) + (m-1) chi(F~ cap Sigma~)) / m."""
    if m < 2:
        raise ValueError("cover degree must be at least 2")
    num = chi_cover + (m - 1) * chi_branch
    if num % m:
        raise InconsistencyError(
            f"({chi_cover} + {m - 1}*{chi_branch})/{m} = {num}/{m} is not an integer; wrong branch data")
    return num // m


def euler_wps(w) -> int:
    """CP^n(a_0..a_n) has the rational cohomology of CP^n: chi = n + 1."""
    return Weights.of(w).n + 1


@dataclass(frozen=True)
class CoverEuler:
    """Intermediate values of the branched-cover route for one subvariety."""
    ambient: int
    degrees: tuple[int, ...]
    sheets: int
    chi_cover: int
    chi_branch: int
    chi: int


def single_heavy_weight(w) -> int | None:
    """m if the weights are (1, ..., 1, m) up to order with m > 1, else None."""
    a = sorted(Weights.of(w).a)
    if a[-1] > 1 and all(x == 1 for x in a[:-1]):
        return a[-1]
    return None


def euler_weighted_ci(w, degrees: Sequence[int]) -> CoverEuler:
    """Euler characteristic of a complete intersection in CP^n(1, ..., 1, m)
    missing the singular point, via the cover from CP^n.

    Pulling back by w_n -> w_n^m keeps every degree, the preimage misses the
    point [0, ..., 0, 1] and meets the branch hyperplane w_n = 0 in a
    complete intersection of the same degrees in CP^(n-1).
    """
    weights = Weights.of(w)
    m = single_heavy_weight(weights)
    if m is None:
        raise ValueError(f"branched-cover route needs weights (1, ..., 1, m); got {weights.a}")
    bad = [d for d in degrees if d % m]
    if bad:
        raise ValueError(f"degrees {bad} not divisible by {m}: the equations cannot avoid the singular point")
    n = weights.n
    cover = euler_ci(n, degrees)
    branch = euler_ci(n - 1, degrees)
    return CoverEuler(n, tuple(degrees), m, cover, branch, branched_euler(cover, branch, m))


# Published values known to be misprinted, keyed by (ambient n, degrees).
KNOWN_MISPRINTS = {
    (3, (8,)): (7808, "the octic surface in CP^3 has chi = 8^3 - 4*8^2 + 6*8 = 304, and only 304 makes "
                      "(-2096 + 3 chi)/4 = -296 = chi(D); the printed 7808 repeats chi(S~)"),
}


def misprint_note(n: int, degrees: Sequence[int]) -> str | None:
    """Warning text when a published value for this query is a known misprint."""
    entry = KNOWN_MISPRINTS.get((n, tuple(degrees)))
    if entry is None:
        return None
    printed, why = entry
    return f"published value {printed} for chi of degree {tuple(degrees)} in CP^{n} is a misprint: {why}"
