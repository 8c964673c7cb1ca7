"""Weighted projective space combinatorics.

Well-formedness and normalisation of weight vectors, the cyclic quotient
strata of CP^n(a_0, ..., a_n), point counts on one- and two-variable strata,
and the arithmetic side of the construction conditions for building blocks
cut out by a regular sequence f_1, ..., f_{k+1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

from .errors import UnsupportedStratumError
from .polynomial import distinct_root_count


def _gcd_all(values) -> int:
    return reduce(gcd, values, 0)


@dataclass(frozen=True)
class Weights:
    """Weights (a_0, ..., a_n) of CP^n(a_0, ..., a_n); gcd of all of them is 1."""
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) < 2:
            raise ValueError("need at least two weights (n >= 1)")
        if any(x <= 0 for x in a):
            raise ValueError(f"weights must be positive: {a}")
        if _gcd_all(a) != 1:
            raise ValueError(f"gcd of weights {a} is {_gcd_all(a)}, not 1")
        object.__setattr__(self, "a", a)

    @classmethod
    def of(cls, w) -> Weights:
        return w if isinstance(w, Weights) else cls(tuple(w))

    @property
    def n(self) -> int:
        return len(self.a) - 1

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __repr__(self):
        return f"Weights{self.a}"


def is_well_formed(w) -> bool:
    """Every n of the n+1 weights are coprime."""
    a = Weights.of(w).a
    return all(_gcd_all(a[:i] + a[i + 1:]) == 1 for i in range(len(a)))


def normalize(w) -> Weights:
    """Divide out common factors of all-but-one weights until well-formed.

    CP^n(a_0, ..., a_n) is isomorphic to CP^n(a_0, a_1/q, ..., a_n/q) with
    q = gcd(a_1, ..., a_n); applying this for each omitted index in turn
    reaches a well-formed fixed point.
    """
    a = list(Weights.of(w).a)
    changed = True
    while changed:
        changed = False
        for i in range(len(a)):
            q = _gcd_all(a[:i] + a[i + 1:])
            if q > 1:
                a = [x if j == i else x // q for j, x in enumerate(a)]
                changed = True
    return Weights(tuple(a))


@dataclass(frozen=True)
class SingularStratum:
    support: tuple[int, ...]
    group_order: int
    action_weights: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.support) - 1


def singular_strata(w) -> list[SingularStratum]:
    """Maximal index sets I with gcd{a_i : i in I} > 1.

    Every such I lies inside I_m = {i : m | a_i} for m = its gcd, so the
    maximal ones are the maximal I_m over divisors m > 1 of the weights.
    """
    a = Weights.of(w).a
    candidates = set()
    for m in range(2, max(a) + 1):
        support = tuple(i for i, x in enumerate(a) if x % m == 0)
        if support:
            candidates.add(support)
    maximal = [s for s in candidates if not any(set(s) < set(t) for t in candidates)]
    strata = []
    for s in sorted(maximal):
        m = _gcd_all(a[i] for i in s)
        action = tuple(a[j] % m for j in range(len(a)) if j not in s)
        strata.append(SingularStratum(s, m, action))
    return strata


def count_stratum_points(form: Mapping[tuple[int, ...], Fraction]) -> int:
    """Distinct zeros of a form restricted to a point or P^1 stratum.

    ``form`` maps exponent tuples in the stratum variables to coefficients.
    For one variable the stratum is a single point, which lies on the zero
    set iff the restricted form vanishes identically.  For two variables the
    count is the number of distinct roots of the binary form on P^1.
    """
    keys = list(form)
    nvars = len(keys[0]) if keys else None
    if nvars is None:
        raise ValueError("cannot infer the stratum dimension of an empty form; pass {(0,): 0} for a point")
    if nvars >= 3:
        raise UnsupportedStratumError(f"point counting on a {nvars}-variable stratum is not supported")
    nonzero = {k: Fraction(c) for k, c in form.items() if c}
    if nvars == 1:
        return 1 if not nonzero else 0
    if not nonzero:
        raise ValueError("form vanishes on the whole P^1 stratum")
    degrees = {sum(k) for k in nonzero}
    if len(degrees) != 1:
        raise ValueError("binary form is not homogeneous on the stratum")
    (deg,) = degrees
    # dehomogenise at y = 1; a drop in degree means roots at [1:0]
    dense = [Fraction(0)] * (deg + 1)
    for (ex, _), c in nonzero.items():
        dense[ex] += c
    top = max(i for i, c in enumerate(dense) if c)
    at_infinity = 1 if top < deg else 0
    return distinct_root_count(dense[:top + 1]) + at_infinity


def is_scalar_z4_action(s: SingularStratum) -> bool:
    """True iff the transverse action is C^4/Z_4 by a single unit scalar."""
    if s.group_order != 4 or len(s.action_weights) != 4:
        return False
    c = s.action_weights[0] % 4
    return gcd(c, 4) == 1 and all(x % 4 == c for x in s.action_weights)


def fermat_quasismooth(w, d: int) -> bool:
    """Diagonal hypersurface sum z_i^(d/a_i) is quasismooth iff a_i | d for all i."""
    return all(d % a == 0 for a in Weights.of(w))


ASSERTION_NAMES = (
    "quasismooth",
    "d_smooth",
    "s_smooth",
    "involution_free_on_d_and_s",
    "fixed_locus_is_singular_locus",
)


@dataclass(frozen=True)
class ConstructionConfig:
    """Weights and the degrees of f_1..f_{k+1}, split by role.

    ``v_degrees`` cut out V (k-1 of them), ``d_degree`` cuts D inside V and
    ``s_degree`` cuts S inside D.  ``assertions`` holds the geometric
    conditions that are carried rather than computed, each with a source.
    """
    weights: Weights
    v_degrees: tuple[int, ...]
    d_degree: int
    s_degree: int
    assertions: Mapping[str, tuple[bool, str]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "weights", Weights.of(self.weights))
        object.__setattr__(self, "v_degrees", tuple(int(d) for d in self.v_degrees))
        if any(d <= 0 for d in self.degrees):
            raise ValueError(f"degrees must be positive: {self.degrees}")
        unknown = set(self.assertions) - set(ASSERTION_NAMES)
        if unknown:
            raise ValueError(f"unknown assertion names: {sorted(unknown)}")

    @property
    def k(self) -> int:
        return len(self.v_degrees) + 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.v_degrees + (self.d_degree, self.s_degree)


@dataclass(frozen=True)
class ConditionResult:
    label: str
    status: str  # PASS, FAIL, ASSERTED or MISSING
    detail: str


@dataclass(frozen=True)
class ConditionReport:
    results: tuple[ConditionResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.status != "FAIL" for r in self.results)

    def __iter__(self):
        return iter(self.results)

    def failures(self) -> list[ConditionResult]:
        return [r for r in self.results if r.status == "FAIL"]


_ASSERTED_CONDITIONS = (
    ("(2)", "quasismooth", "V has isolated C^4/Z_4 points"),
    ("(3)", "d_smooth", "D smooth, D misses Sing V"),
    ("(4)", "s_smooth", "S smooth"),
    ("(5)", "involution_free_on_d_and_s", "sigma^* f_i = conj f_i, free on D and S"),
    ("(6)", "fixed_locus_is_singular_locus", "V^sigma = Sing V"),
)


def check_conditions(c: ConstructionConfig) -> ConditionReport:
    """Evaluate the arithmetic construction conditions and echo the rest.

    (1) anticanonical degree: d_1 + ... + d_k = a_0 + ... + a_n;
    (4) deg f_{k+1} = deg f_k; plus the ambient dimension n = k + 3.
    The geometric conditions are reported as ASSERTED with their source.
    """
    a = c.weights.a
    lhs = sum(c.v_degrees) + c.d_degree
    rhs = sum(a)
    results = [
        ConditionResult("ambient", "PASS" if c.weights.n == c.k + 3 else "FAIL",
                        f"n = {c.weights.n}, k + 3 = {c.k + 3}"),
        ConditionResult("(1)", "PASS" if lhs == rhs else "FAIL",
                        f"{' + '.join(map(str, c.v_degrees + (c.d_degree,)))} = {lhs}"
                        f" {'=' if lhs == rhs else '!='} {rhs} = {' + '.join(map(str, a))}"),
        ConditionResult("(4) degree", "PASS" if c.s_degree == c.d_degree else "FAIL",
                        f"deg f_{c.k + 1} = {c.s_degree} {'=' if c.s_degree == c.d_degree else '!='}"
                        f" {c.d_degree} = deg f_{c.k}"),
    ]
    for label, name, what in _ASSERTED_CONDITIONS:
        if name in c.assertions:
            value, source = c.assertions[name]
            status = "ASSERTED" if value else "FAIL"
            results.append(ConditionResult(label, status, f"{what}: {value} ({source})"))
        else:
            results.append(ConditionResult(label, "MISSING", f"{what}: not supplied"))
    return ConditionReport(tuple(results))
