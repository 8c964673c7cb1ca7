"""Hilbert series of complete-intersection graded rings.

The Hilbert series of C[z_0..z_n]/(f_1..f_k), deg z_j = a_j, deg f_i = e_i,
for a regular sequence is prod(1 - t^e_i) / prod(1 - t^a_j).  We expand it
to a finite order with Python integers, so coefficients never overflow.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import DegeneratePartialError, TruncationError
from .wps import Weights


@dataclass(frozen=True)
class RationalSeriesSpec:
    """prod(1 - t^e) over ``numerator`` divided by prod(1 - t^a) over
    ``denominator``, to be expanded through t^order.

    A numerator exponent of 0 contributes the factor 1 - t^0 = 0 and makes
    the whole series vanish; this is how a Jacobian ring with a unit among
    its generators (a partial derivative that is a nonzero constant) is
    represented.  ``order=None`` means the sum of the numerator exponents.
    """
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    order: int | None = None

    def __post_init__(self):
        num = tuple(sorted(int(e) for e in self.numerator))
        den = tuple(sorted(int(a) for a in self.denominator))
        if any(e < 0 for e in num):
            raise ValueError(f"numerator exponents must be >= 0: {num}")
        if any(a < 1 for a in den):
            raise ValueError(f"denominator exponents must be >= 1: {den}")
        if self.order is not None and self.order < 0:
            raise ValueError("truncation order must be >= 0")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def is_zero(self) -> bool:
        return 0 in self.numerator

    def simplified(self) -> RationalSeriesSpec:
        """Cancel equal (1 - t^e) factors between numerator and denominator."""
        num, den = Counter(self.numerator), Counter(self.denominator)
        common = num & den
        return RationalSeriesSpec(tuple((num - common).elements()), tuple((den - common).elements()), self.order)

    def with_order(self, order: int | None) -> RationalSeriesSpec:
        return RationalSeriesSpec(self.numerator, self.denominator, order)

    def resolved_order(self, requested: int = 0) -> int:
        if self.order is not None:
            return max(self.order, requested)
        return max(requested, sum(self.numerator))

    def __str__(self):
        def prod(exps):
            return "".join(f"(1-t^{e})" for e in exps) or "1"
        return f"{prod(self.numerator)}/{prod(self.denominator)}"


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[int, ...]
    spec: RationalSeriesSpec

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> int:
        return coefficient(self, m)

    def __len__(self):
        return len(self.coeffs)


def expand(spec: RationalSeriesSpec) -> PowerSeries:
    """Exact coefficients c_0..c_N of the rational function in ``spec``."""
    simple = spec.simplified()
    n = spec.resolved_order()
    if simple.is_zero:
        return PowerSeries(tuple([0] * (n + 1)), spec)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for e in simple.numerator:
        # multiply by (1 - t^e), high to low so each term uses old values
        for i in range(n, e - 1, -1):
            coeffs[i] -= coeffs[i - e]
    for a in simple.denominator:
        # divide by (1 - t^a): c_i += c_{i-a}, low to high
        for i in range(a, n + 1):
            coeffs[i] += coeffs[i - a]
    return PowerSeries(tuple(coeffs), spec)


def coefficient(s: PowerSeries, m: int) -> int:
    """Dimension of the degree-m piece; negative m gives 0."""
    if m < 0:
        return 0
    if m > s.order:
        raise TruncationError(f"coefficient {m} requested but series is truncated at order {s.order}")
    return s.coeffs[m]


def graded_dimension(spec: RationalSeriesSpec, m: int) -> int:
    """Coefficient of t^m, expanding far enough to reach it."""
    if m < 0:
        return 0
    return coefficient(expand(spec.with_order(spec.resolved_order(m))), m)


def jacobian_spec(w: Weights | Sequence[int], d: int, order: int | None = None) -> RationalSeriesSpec:
    """Hilbert-series spec of the Jacobian ring of a degree-d weighted form.

    The partials have degrees d - a_i; when they form a regular sequence
    (true for Fermat-type f) the series is prod(1 - t^(d-a_i)) /
    prod(1 - t^a_i).  A weight equal to d gives a constant partial and the
    zero ring.  Common factors are cancelled.
    """
    a = Weights.of(w).a
    bad = [x for x in a if x > d]
    if bad:
        raise DegeneratePartialError(f"weights {bad} exceed the degree {d}; partial derivatives vanish")
    return RationalSeriesSpec(tuple(d - x for x in a), a, order).simplified()


def complete_intersection_spec(w: Weights | Sequence[int], degrees: Sequence[int],
                               order: int | None = None) -> RationalSeriesSpec:
    """Spec of C[z]/(f_1..f_k) for a regular sequence of the given degrees."""
    return RationalSeriesSpec(tuple(degrees), tuple(Weights.of(w).a), order).simplified()
