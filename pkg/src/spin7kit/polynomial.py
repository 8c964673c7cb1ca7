"""Sparse multivariate polynomials with rational coefficients.

A polynomial is a ``dict`` mapping exponent tuples to ``Fraction``.  Only
the few operations the weighted-projective code needs live here: parsing
``"z0^8 + 2*z4 - z5^2"``, restriction to coordinate subspaces, weighted
degree, and univariate gcd for root counting.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

Poly = dict[tuple[int, ...], Fraction]

_TERM = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"^(?:z(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_polynomial(text: str, nvars: int) -> Poly:
    """Parse a sum of monomials in ``z0 .. z{nvars-1}``.

    Accepts integer or ``p/q`` coefficients, ``*`` between factors and
    ``^`` for powers.  Anything else raises ``ValueError``.
    """
    body = text.replace(" ", "")
    if not body:
        raise ValueError("empty polynomial")
    out: Poly = {}
    pos = 0
    for match in _TERM.finditer(body):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps = [0] * nvars
        for factor in match.group(2).split("*"):
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(3):
                coeff *= Fraction(fm.group(3))
                continue
            var = int(fm.group(1))
            if var >= nvars:
                raise ValueError(f"variable z{var} out of range for {nvars} variables")
            exps[var] += int(fm.group(2) or 1)
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    if pos != len(body):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return {k: c for k, c in out.items() if c}


def weighted_degrees(poly: Mapping[tuple[int, ...], Fraction], weights: Sequence[int]) -> set[int]:
    return {sum(e * w for e, w in zip(k, weights)) for k in poly}


def restrict(poly: Mapping[tuple[int, ...], Fraction], support: Sequence[int]) -> Poly:
    """Set every variable outside ``support`` to zero; keep the support
    variables in their given order."""
    keep = list(support)
    out: Poly = {}
    for k, c in poly.items():
        if any(e for i, e in enumerate(k) if i not in keep):
            continue
        key = tuple(k[i] for i in keep)
        out[key] = out.get(key, 0) + Fraction(c)
    return {k: c for k, c in out.items() if c}


# univariate dense helpers: index i holds the coefficient of x^i

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return _trim([i * Fraction(c) for i, c in enumerate(p)][1:])


def poly_mod(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    r = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    while len(r) >= len(b):
        f = r[-1] / b[-1]
        shift = len(r) - len(b)
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r.pop()
        _trim(r)
    return r


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd of two univariate polynomials."""
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        a, b = b, poly_mod(a, b)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def distinct_root_count(p: Sequence[Fraction]) -> int:
    """Number of distinct complex roots: degree of the squarefree part."""
    p = _trim([Fraction(x) for x in p])
    if not p:
        raise ValueError("zero polynomial has infinitely many roots")
    deg = len(p) - 1
    if deg == 0:
        return 0
    g = poly_gcd(p, derivative(p))
    return deg - (len(g) - 1)
