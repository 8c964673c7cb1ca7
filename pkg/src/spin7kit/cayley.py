"""Exact exterior algebra on R^8 and the Spin(7) linear algebra around the
Cayley 4-form.

Forms are sparse maps from strictly increasing index tuples (indices 1..8)
to ``Fraction`` coefficients.  Linear maps act on coordinates: a matrix
``M`` sends ``x`` to ``M x``, so the pullback of the coordinate covector
``theta^i`` is ``sum_j M[i][j] theta^j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import exact

DIM = 8
Index = tuple[int, ...]


def _sort_sign(indices: Sequence[int]) -> tuple[int, Index]:
    """Sign of the permutation sorting ``indices``; 0 on a repeated index."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1) ** inversions, tuple(sorted(idx))


@dataclass(frozen=True)
class Form:
    degree: int
    coeffs: Mapping[Index, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.degree <= DIM:
            raise ValueError(f"degree {self.degree} outside 0..{DIM}")
        clean = {}
        for key, c in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"index {key} is not strictly increasing of length {self.degree}")
            if not all(1 <= i <= DIM for i in key):
                raise ValueError(f"index {key} outside 1..{DIM}")
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, *indices: int) -> Form:
        """``theta^{i1...ik}`` with sign normalisation for unsorted input."""
        sign, key = _sort_sign(indices)
        return cls(len(indices), {key: sign} if sign else {})

    @classmethod
    def zero(cls, degree: int) -> Form:
        return cls(degree, {})

    def __getitem__(self, key: Iterable[int]) -> Fraction:
        sign, k = _sort_sign(tuple(key))
        return sign * self.coeffs.get(k, Fraction(0))

    def __add__(self, other: Form) -> Form:
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Form(self.degree, out)

    def __neg__(self) -> Form:
        return Form(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, scalar) -> Form:
        s = Fraction(scalar)
        return Form(self.degree, {k: s * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __xor__(self, other: Form) -> Form:
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def dense(self) -> list[Fraction]:
        """Coefficients in lexicographic order of the index subsets."""
        return [self.coeffs.get(k, Fraction(0)) for k in basis_indices(self.degree)]

    @classmethod
    def from_dense(cls, degree: int, values: Sequence) -> Form:
        return cls(degree, dict(zip(basis_indices(degree), values)))

    def __repr__(self):
        if not self.coeffs:
            return f"Form({self.degree}, 0)"
        terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}θ^{''.join(map(str, k))}"
                         for k, c in sorted(self.coeffs.items()))
        return f"Form({self.degree}, {terms})"


def basis_indices(degree: int) -> list[Index]:
    return list(combinations(range(1, DIM + 1), degree))


def inner(f: Form, g: Form) -> Fraction:
    """g_0 inner product: coefficientwise dot in the orthonormal theta basis."""
    if f.degree != g.degree:
        raise ValueError("inner product of forms of different degree")
    return sum((c * g.coeffs.get(k, 0) for k, c in f.coeffs.items()), Fraction(0))


def wedge(f: Form, g: Form) -> Form:
    if f.degree + g.degree > DIM:
        raise ValueError(f"wedge degree {f.degree}+{g.degree} exceeds {DIM}")
    out: dict[Index, Fraction] = {}
    for k1, c1 in f.coeffs.items():
        for k2, c2 in g.coeffs.items():
            sign, key = _sort_sign(k1 + k2)
            if sign:
                out[key] = out.get(key, 0) + sign * c1 * c2
    return Form(f.degree + g.degree, out)


@dataclass(frozen=True)
class LinearMap8:
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError("LinearMap8 needs an 8x8 matrix")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls) -> LinearMap8:
        return cls(tuple(tuple(int(i == j) for j in range(DIM)) for i in range(DIM)))

    @classmethod
    def from_images(cls, images: Sequence[tuple[int, int]]) -> LinearMap8:
        """Build a signed coordinate permutation: output coordinate ``i`` is
        ``sign * x_j`` for ``images[i] = (sign, j)`` with 1-based ``j``."""
        rows = []
        for sign, j in images:
            rows.append(tuple(sign if col == j - 1 else 0 for col in range(DIM)))
        return cls(tuple(rows))

    def __matmul__(self, other: LinearMap8) -> LinearMap8:
        a, b = self.matrix, other.matrix
        return LinearMap8(tuple(tuple(sum(a[i][k] * b[k][j] for k in range(DIM)) for j in range(DIM))
                                for i in range(DIM)))

    def __pow__(self, n: int) -> LinearMap8:
        out = LinearMap8.identity()
        for _ in range(n):
            out = out @ self
        return out

    def __neg__(self) -> LinearMap8:
        return LinearMap8(tuple(tuple(-x for x in row) for row in self.matrix))

    def __sub__(self, other: LinearMap8) -> LinearMap8:
        return LinearMap8(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def det(self) -> Fraction:
        return exact.det(self.matrix)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)


def pullback(f: Form, a: LinearMap8) -> Form:
    """``a^* f``; the coefficient of theta^J in a^* theta^I is the minor M[I, J]."""
    out: dict[Index, Fraction] = {}
    m = a.matrix
    targets = basis_indices(f.degree)
    for key, c in f.coeffs.items():
        rows = [m[i - 1] for i in key]
        for target in targets:
            minor = exact.det([[row[j - 1] for j in target] for row in rows])
            if minor:
                out[target] = out.get(target, 0) + c * minor
    return Form(f.degree, out)


def derivation(f: Form, a: Sequence[Sequence]) -> Form:
    """Infinitesimal pullback ``d/dt exp(tA)^* f`` at t = 0.

    Substitutes ``theta^i -> sum_j A[i][j] theta^j`` into one slot at a time.
    """
    out: dict[Index, Fraction] = {}
    for key, c in f.coeffs.items():
        for slot, i in enumerate(key):
            for j in range(1, DIM + 1):
                aij = Fraction(a[i - 1][j - 1])
                if not aij:
                    continue
                sign, k = _sort_sign(key[:slot] + (j,) + key[slot + 1:])
                if sign:
                    out[k] = out.get(k, 0) + sign * c * aij
    return Form(f.degree, out)


def hodge_star(f: Form) -> Form:
    """Hodge star for g_0 with orientation theta^{12345678}."""
    full = tuple(range(1, DIM + 1))
    out = {}
    for key, c in f.coeffs.items():
        comp = tuple(i for i in full if i not in key)
        sign, _ = _sort_sign(key + comp)
        out[comp] = sign * c
    return Form(DIM - f.degree, out)


def hodge_star4(f: Form) -> Form:
    if f.degree != 4:
        raise ValueError(f"hodge_star4 needs a 4-form, got degree {f.degree}")
    return hodge_star(f)


_CAYLEY_TERMS = {
    (1, 2, 3, 4): 1, (1, 2, 5, 6): 1, (1, 2, 7, 8): 1, (1, 3, 5, 7): 1,
    (1, 3, 6, 8): -1, (1, 4, 5, 8): -1, (1, 4, 6, 7): -1,
    (2, 3, 5, 8): -1, (2, 3, 6, 7): -1, (2, 4, 5, 7): -1, (2, 4, 6, 8): 1,
    (3, 4, 5, 6): 1, (3, 4, 7, 8): 1, (5, 6, 7, 8): 1,
}


def make_cayley_form() -> Form:
    """The standard Spin(7)-invariant 4-form Phi_0 (14 unit terms)."""
    return Form(4, _CAYLEY_TERMS)


# alpha, beta act on coordinates; phi exchanges the z- and w-coordinate systems.
ALPHA = LinearMap8.from_images([(-1, 2), (1, 1), (-1, 4), (1, 3), (-1, 6), (1, 5), (-1, 8), (1, 7)])
BETA = LinearMap8.from_images([(1, 3), (-1, 4), (-1, 1), (1, 2), (1, 7), (-1, 8), (-1, 5), (1, 6)])
PHI = LinearMap8.from_images([(-1, 1), (1, 3), (1, 2), (1, 4), (-1, 5), (1, 7), (1, 6), (1, 8)])


class ComplexCovector(NamedTuple):
    """A complex linear functional re + i*im on R^8 (coefficient vectors)."""
    re: tuple[int, ...]
    im: tuple[int, ...]

    def one_forms(self) -> tuple[Form, Form]:
        re = Form(1, {(i + 1,): c for i, c in enumerate(self.re)})
        im = Form(1, {(i + 1,): c for i, c in enumerate(self.im)})
        return re, im

    def compose(self, a: LinearMap8) -> ComplexCovector:
        """The functional ``x -> self(a x)``."""
        m = a.matrix
        re = tuple(sum(self.re[i] * m[i][j] for i in range(DIM)) for j in range(DIM))
        im = tuple(sum(self.im[i] * m[i][j] for i in range(DIM)) for j in range(DIM))
        return ComplexCovector(re, im)


def _unit(i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == i - 1 else 0 for k in range(DIM))


Z_COORDS = tuple(ComplexCovector(_unit(2 * k - 1), _unit(2 * k)) for k in range(1, 5))
W_COORDS = (
    ComplexCovector(_unit(1, -1), _unit(3)),
    ComplexCovector(_unit(2), _unit(4)),
    ComplexCovector(_unit(5, -1), _unit(7)),
    ComplexCovector(_unit(6), _unit(8)),
)


def _cwedge(a: tuple[Form, Form], b: tuple[Form, Form]) -> tuple[Form, Form]:
    return wedge(a[0], b[0]) - wedge(a[1], b[1]), wedge(a[0], b[1]) + wedge(a[1], b[0])


def kahler_form(coords: Sequence[ComplexCovector]) -> Form:
    """omega = (i/2) sum dz ^ d(conj z) = sum d(re z) ^ d(im z)."""
    out = Form.zero(2)
    for c in coords:
        re, im = c.one_forms()
        out = out + wedge(re, im)
    return out


def holomorphic_volume(coords: Sequence[ComplexCovector]) -> tuple[Form, Form]:
    """(Re, Im) of dz_1 ^ dz_2 ^ dz_3 ^ dz_4."""
    acc = (Form(0, {(): 1}), Form.zero(0))
    for c in coords:
        acc = _cwedge(acc, c.one_forms())
    return acc


def calabi_yau_cayley_form(coords: Sequence[ComplexCovector]) -> Form:
    """The 4-form omega^2/2 + Re(Omega) built from complex coordinates."""
    omega = kahler_form(coords)
    return Fraction(1, 2) * wedge(omega, omega) + holomorphic_volume(coords)[0]


@dataclass(frozen=True)
class RelationReport:
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_group_relations() -> RelationReport:
    """Check alpha^4 = beta^4 = id, alpha beta = beta alpha^3, alpha^2 = -id
    and that phi carries the z-coordinates to the w-coordinates."""
    ident = LinearMap8.identity()
    checks = {
        "alpha^4 = id": ALPHA**4 == ident,
        "beta^4 = id": BETA**4 == ident,
        "alpha beta = beta alpha^3": (ALPHA @ BETA - BETA @ ALPHA**3).is_zero(),
        "alpha^2 = -id": ALPHA**2 == -ident,
        "z o phi = w": all(z.compose(PHI) == w for z, w in zip(Z_COORDS, W_COORDS)),
    }
    return RelationReport(checks)


def _elementary(i: int, j: int) -> list[list[int]]:
    return [[int(r == i and c == j) for c in range(DIM)] for r in range(DIM)]


class OrbitTangent(NamedTuple):
    generators: list[Form]
    rank: int
    stabilizer_dim: int


def orbit_tangent_basis(phi: Form | None = None) -> OrbitTangent:
    """Spanning set {L_A Phi : A = E_ij} of the GL(8)-orbit tangent at ``phi``.

    ``stabilizer_dim`` is the dimension of {A : L_A Phi = 0}, computed as a
    null space independently of the rank.
    """
    return _orbit_tangent(make_cayley_form() if phi is None else phi)


@lru_cache(maxsize=8)
def _orbit_tangent(phi: Form) -> OrbitTangent:
    gens = [derivation(phi, _elementary(i, j)) for i in range(DIM) for j in range(DIM)]
    dense = [g.dense() for g in gens]
    r = exact.rank(dense)
    columns = [list(col) for col in zip(*dense)]  # 70 x 64: image of A -> L_A phi
    kernel = exact.nullspace(columns, ncols=len(gens))
    return OrbitTangent(gens, r, len(kernel))


def stabilizer_algebra(phi: Form | None = None) -> list[list[list[Fraction]]]:
    """Basis of the Lie algebra {A : L_A Phi = 0} as 8x8 matrices."""
    phi = make_cayley_form() if phi is None else phi
    gens = [derivation(phi, _elementary(i, j)) for i in range(DIM) for j in range(DIM)]
    columns = [list(col) for col in zip(*(g.dense() for g in gens))]
    return [[vec[DIM * i:DIM * (i + 1)] for i in range(DIM)] for vec in exact.nullspace(columns, ncols=len(gens))]


def tangent_space_basis(phi: Form | None = None) -> list[Form]:
    """Row-reduced basis of the orbit tangent space."""
    return list(_tangent_basis(make_cayley_form() if phi is None else phi))


@lru_cache(maxsize=8)
def _tangent_basis(phi: Form) -> tuple[Form, ...]:
    reduced, _ = exact.rref([g.dense() for g in _orbit_tangent(phi).generators])
    return tuple(Form.from_dense(4, row) for row in reduced)


def normal_space_basis(phi: Form | None = None) -> list[Form]:
    """Basis of the g_0-orthogonal complement of the orbit tangent space."""
    tangent = tangent_space_basis(phi)
    return [Form.from_dense(4, v) for v in exact.nullspace([t.dense() for t in tangent], ncols=70)]


def split_tangent_normal(eta: Form, phi: Form | None = None) -> tuple[Form, Form]:
    """Orthogonal decomposition ``eta = p(eta) + n(eta)`` into tangent and
    normal parts at ``phi`` (the linearisation of the projection onto the
    orbit)."""
    if eta.degree != 4:
        raise ValueError("only 4-forms decompose along the orbit")
    tangent = tangent_space_basis(phi)
    normal = normal_space_basis(phi)
    basis = tangent + normal
    # solve sum c_k basis_k = eta
    cols = [b.dense() for b in basis]
    augmented = [[cols[k][row] for k in range(len(cols))] + [eta.dense()[row]] for row in range(70)]
    reduced, pivots = exact.rref(augmented)
    coeff = [Fraction(0)] * len(basis)
    for row, p in zip(reduced, pivots):
        coeff[p] = row[-1]
    t_part = Form.zero(4)
    for c, b in zip(coeff[:len(tangent)], tangent):
        t_part = t_part + c * b
    return t_part, eta - t_part


def anti_self_dual_basis() -> list[Form]:
    """theta^I - *theta^I over the 35 index sets I containing 1."""
    return [Form(4, {k: 1}) - hodge_star4(Form(4, {k: 1})) for k in basis_indices(4) if k[0] == 1]


def check_asd_inclusion(forms: Iterable[Form] | None = None) -> bool:
    """True iff every given 4-form (default: the anti-self-dual basis) lies in
    the rational span of the orbit tangent generators."""
    forms = anti_self_dual_basis() if forms is None else list(forms)
    span = [g.dense() for g in orbit_tangent_basis().generators]
    base = exact.rank(span)
    return all(exact.rank(span + [f.dense()]) == base for f in forms)


def cayley_report() -> dict[str, object]:
    """All Cayley identities as a name -> value mapping for reporting."""
    phi0 = make_cayley_form()
    rel = verify_group_relations()
    tangent = orbit_tangent_basis(phi0)
    asd = anti_self_dual_basis()
    report: dict[str, object] = dict(rel.checks)
    report.update({
        "alpha^* Phi0 = Phi0": pullback(phi0, ALPHA) == phi0,
        "beta^* Phi0 = Phi0": pullback(phi0, BETA) == phi0,
        "phi^* Phi0 = Phi0": pullback(phi0, PHI) == phi0,
        "z-presentation = Phi0": calabi_yau_cayley_form(Z_COORDS) == phi0,
        "w-presentation = Phi0": calabi_yau_cayley_form(W_COORDS) == phi0,
        "*Phi0 = Phi0": hodge_star4(phi0) == phi0,
        "ASD dimension": exact.rank([f.dense() for f in asd]),
        "ASD in orbit tangent": check_asd_inclusion(asd),
        "orbit tangent rank": tangent.rank,
        "stabilizer dimension": tangent.stabilizer_dim,
        "rank = 64 - stabilizer": tangent.rank == 64 - tangent.stabilizer_dim,
    })
    return report
