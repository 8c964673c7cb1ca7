"""Hodge numbers of weighted hypersurfaces and complete intersections.

Middle Hodge numbers of a quasismooth hypersurface come from graded pieces
of its Jacobian ring; for complete intersections only h^{0,q} follows from
the residue ring, and the rest of a surface diamond is closed up with the
Euler characteristic and b^1 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InconsistencyError
from .series import complete_intersection_spec, graded_dimension, jacobian_spec
from .wps import Weights


@dataclass(frozen=True)
class HodgeDiamond:
    """h^{p,q} for 0 <= p, q <= n, stored as an (n+1) x (n+1) matrix h[p][q]."""
    n: int
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        h = tuple(tuple(int(x) for x in row) for row in self.h)
        if len(h) != self.n + 1 or any(len(row) != self.n + 1 for row in h):
            raise ValueError(f"Hodge matrix must be {self.n + 1}x{self.n + 1}")
        if any(x < 0 for row in h for x in row):
            raise ValueError("Hodge numbers must be nonnegative")
        object.__setattr__(self, "h", h)

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[tuple[int, int], int]) -> HodgeDiamond:
        return cls(n, tuple(tuple(values.get((p, q), 0) for q in range(n + 1)) for p in range(n + 1)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> HodgeDiamond:
        """Read a diamond as printed, top row first.

        Row r (0-based) lists h^{p,q} with p + q = 2n - r, from the largest
        p on the left to the smallest.  So the top row is h^{n,n} and the
        middle row reads h^{n,0}, h^{n-1,1}, ..., h^{0,n}.
        """
        if len(rows) % 2 != 1:
            raise ValueError("a diamond has an odd number of rows")
        n = len(rows) // 2
        values = {}
        for r, row in enumerate(rows):
            total = 2 * n - r
            ps = [p for p in range(n, -1, -1) if 0 <= total - p <= n]
            if len(row) != len(ps):
                raise ValueError(f"row {r} needs {len(ps)} entries, got {len(row)}")
            for p, x in zip(ps, row):
                values[(p, total - p)] = x
        return cls.from_mapping(n, values)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.h[p][q]

    def rows(self) -> list[list[int]]:
        """Inverse of :meth:`from_rows`."""
        out = []
        for r in range(2 * self.n + 1):
            total = 2 * self.n - r
            out.append([self.h[p][total - p] for p in range(self.n, -1, -1) if 0 <= total - p <= self.n])
        return out

    def middle_row(self) -> tuple[int, ...]:
        """h^{n,0}, h^{n-1,1}, ..., h^{0,n}."""
        return tuple(self.h[p][self.n - p] for p in range(self.n, -1, -1))

    def betti(self) -> tuple[int, ...]:
        return tuple(sum(self.h[p][k - p] for p in range(self.n + 1) if 0 <= k - p <= self.n)
                     for k in range(2 * self.n + 1))

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))

    def is_hodge_symmetric(self) -> bool:
        return all(self.h[p][q] == self.h[q][p] for p in range(self.n + 1) for q in range(self.n + 1))

    def is_serre_symmetric(self) -> bool:
        n = self.n
        return all(self.h[p][q] == self.h[n - p][n - q] for p in range(n + 1) for q in range(n + 1))

    def pretty(self) -> str:
        rows = self.rows()
        width = max(len(str(x)) for row in rows for x in row) + 2
        width += width % 2
        lines = []
        for row in rows:
            pad = (self.n + 1 - len(row)) * width // 2
            lines.append(" " * pad + "".join(str(x).center(width) for x in row))
        return "\n".join(line.rstrip() for line in lines)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": self.rows()}


def hodge_signature(d: HodgeDiamond) -> int:
    """sum (-1)^q h^{p,q} (Hodge index theorem; smooth Kahler, even n)."""
    if d.n % 2:
        raise ValueError(f"signature needs even complex dimension, got {d.n}")
    return sum((-1) ** q * d.h[p][q] for p in range(d.n + 1) for q in range(d.n + 1))


def hypersurface_hodge(w, d: int) -> HodgeDiamond:
    """Hodge diamond of a quasismooth degree-d hypersurface in CP^n(a).

    Off the middle row only h^{p,p} = 1 survives.  On the middle row
    (p + q = n - 1 = dim X), h^{p,q} = dim R(f)_{qd + alpha} with
    alpha = d - sum(a), plus 1 when p = q.  Assumes the partials of f form
    a regular sequence (Fermat type).
    """
    weights = Weights.of(w)
    dim = weights.n - 1
    alpha = d - sum(weights.a)
    spec = jacobian_spec(weights, d)
    values = {}
    for p in range(dim + 1):
        for q in range(dim + 1):
            if p + q != dim:
                values[(p, q)] = int(p == q)
            else:
                values[(p, q)] = graded_dimension(spec, q * d + alpha) + int(p == q)
    return HodgeDiamond.from_mapping(dim, values)


def ci_h0q(w, degrees: Sequence[int], m: int, q: int) -> int:
    """h^q(X, O_X(m)) of a well-formed quasismooth weighted complete
    intersection: A_m for q = 0, 0 strictly between, A_{alpha-m} at the top,
    where A is the residue ring and alpha = sum(d) - sum(a)."""
    weights = Weights.of(w)
    dim = weights.n - len(degrees)
    if not 0 <= q <= dim:
        raise ValueError(f"q = {q} outside 0..{dim}")
    spec = complete_intersection_spec(weights, degrees)
    alpha = sum(degrees) - sum(weights.a)
    if q == dim:
        return graded_dimension(spec, alpha - m)
    if q == 0:
        return graded_dimension(spec, m)
    return 0


@dataclass(frozen=True)
class SurfaceInvariants:
    chi: int
    tau: int
    betti: tuple[int, ...]
    diamond: HodgeDiamond


def surface_from_chi_h02(chi: int, h02: int) -> SurfaceInvariants:
    """Close a surface diamond from chi and h^{0,2}, taking b^1 = 0.

    h^{1,1} = chi - 2 - 2 h^{0,2} and tau = 2 + 2 h^{0,2} - h^{1,1}.
    """
    h11 = chi - 2 - 2 * h02
    if h11 < 0:
        raise InconsistencyError(f"h^{{1,1}} = {chi} - 2 - 2*{h02} = {h11} < 0")
    diamond = HodgeDiamond(2, ((1, 0, h02), (0, h11, 0), (h02, 0, 1)))
    return SurfaceInvariants(chi, 2 + 2 * h02 - h11, diamond.betti(), diamond)


def surface_from_diamond(d: HodgeDiamond) -> SurfaceInvariants:
    if d.n != 2:
        raise ValueError("not a surface diamond")
    return SurfaceInvariants(d.euler(), hodge_signature(d), d.betti(), d)


def cy3_betti(chi: int, h11: int) -> tuple[int, ...]:
    """Betti numbers of a Calabi-Yau threefold with h^{1,0} = h^{2,0} = 0,
    using chi = 2 (h^{1,1} - h^{2,1})."""
    if chi % 2:
        raise InconsistencyError(f"Calabi-Yau threefold Euler number {chi} is odd")
    h21 = h11 - chi // 2
    if h21 < 0:
        raise InconsistencyError(f"h^{{2,1}} = {h11} - {chi}/2 = {h21} < 0")
    return (1, 0, h11, 2 + 2 * h21, h11, 0, 1)


def cy3_diamond(chi: int, h11: int) -> HodgeDiamond:
    b = cy3_betti(chi, h11)
    h21 = (b[3] - 2) // 2
    return HodgeDiamond(3, ((1, 0, 0, 1), (0, h11, h21, 0), (0, h21, h11, 0), (1, 0, 0, 1)))
