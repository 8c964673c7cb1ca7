"""Invariant algebra of the gluing construction.

A building block moves through fixed stages:

    V --blow_up--> Xbar --open_part--> X --quotient--> Z --glue--> Mtriangle --resolve--> M

and, for the Calabi-Yau variant, Xbar --crepant_block--> Xhat --cy_double--> M.
Each step is an exact integer identity; every halving and the division by
48 either comes out even or raises :class:`InconsistencyError`.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Mapping

from .cohomology import SurfaceInvariants
from .errors import ClassificationError, InconsistencyError, StageError


class Stage(str, Enum):
    V = "V"
    XBAR = "Xbar"
    X = "X"
    Z = "Z"
    MTRIANGLE = "Mtriangle"
    M = "M"
    XHAT = "Xhat"


class Holonomy(str, Enum):
    SPIN7 = "Spin(7)"
    SU4 = "SU(4)"
    SP2 = "Sp(2)"
    SP1XSP1 = "Sp(1)xSp(1)"
    INDETERMINATE = "indeterminate"


_HOLONOMY_BY_AHAT = {1: Holonomy.SPIN7, 2: Holonomy.SU4, 3: Holonomy.SP2, 4: Holonomy.SP1XSP1}


@dataclass(frozen=True)
class BlockInvariants:
    """Euler characteristic, signature, known Betti numbers and the number
    of isolated C^4/Z_4 points (or sigma-fixed points) of one block.

    ``betti`` maps degree to b^i and may be partial.  When it covers every
    degree 0..8 the alternating sum must equal ``chi``.
    """
    label: str
    chi: int
    tau: int
    stage: Stage
    betti: Mapping[int, int] = field(default_factory=dict)
    sing_points: int = 0
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stage", Stage(self.stage))
        object.__setattr__(self, "betti", dict(sorted((int(k), int(v)) for k, v in dict(self.betti).items())))
        if self.sing_points < 0:
            raise ValueError("number of singular points must be >= 0")
        if any(v < 0 for v in self.betti.values()):
            raise ValueError(f"negative Betti number in {self.betti}")
        if set(self.betti) == set(range(9)):
            total = sum((-1) ** i * b for i, b in self.betti.items())
            if total != self.chi:
                raise InconsistencyError(f"{self.label}: alternating Betti sum {total} != chi {self.chi}")

    def b(self, i: int) -> int:
        try:
            return self.betti[i]
        except KeyError:
            raise StageError(f"{self.label}: b^{i} is not known at stage {self.stage.value}") from None

    def to_dict(self) -> dict:
        return {
            "label": self.label, "stage": self.stage.value, "chi": self.chi, "tau": self.tau,
            "betti": {str(k): v for k, v in self.betti.items()}, "sing_points": self.sing_points,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> BlockInvariants:
        return cls(d["label"], d["chi"], d["tau"], Stage(d["stage"]),
                   {int(k): v for k, v in d.get("betti", {}).items()}, d.get("sing_points", 0),
                   tuple(d.get("notes", ())))


def _require(block: BlockInvariants, stage: Stage, op: str) -> None:
    if block.stage != stage:
        raise StageError(f"{op} needs a block at stage {stage.value}, got {block.label} at {block.stage.value}")


def _halve(value: int, what: str) -> int:
    if value % 2:
        raise InconsistencyError(f"{what} = {value} is odd; cannot halve (wrong fixed-point count?)")
    return value // 2


def blow_up(v: BlockInvariants, s: SurfaceInvariants, label: str = "Xbar") -> BlockInvariants:
    """Blow up V along the surface S; the exceptional divisor is S x CP^1.

    chi(Xbar) = chi(V) + chi(E) - chi(S) = chi(V) + chi(S),
    tau(Xbar) = tau(V) - tau(S), b^i(Xbar) = b^i(V) + b^{i-2}(S).
    """
    _require(v, Stage.V, "blow_up")
    for i in (2, 3):
        v.b(i)  # raises when missing
    s_b = dict(enumerate(s.betti))
    betti = {i: bi + s_b.get(i - 2, 0) for i, bi in v.betti.items()}
    return BlockInvariants(label, v.chi + s.chi, v.tau - s.tau, Stage.XBAR, betti, v.sing_points, v.notes)


def open_part(xbar: BlockInvariants, d_chi: int, d_b2: int, label: str = "X") -> BlockInvariants:
    """Remove the anticanonical divisor D: X = Xbar minus D.

    chi(X) = chi(Xbar) - chi(D); tau(X) = (2 tau(Xbar) - tau(D x CP^1))/2
    = tau(Xbar); Mayer-Vietoris on Xbar = X u U with X n U ~ D x S^1 gives
    b^2(X) = b^2(Xbar) - 1 and b^3(X) = b^3(Xbar) + b^2(D) - b^2(X).
    """
    _require(xbar, Stage.XBAR, "open_part")
    b2 = xbar.b(2) - 1
    b3 = xbar.b(3) + d_b2 - b2
    if b2 < 0 or b3 < 0:
        raise InconsistencyError(f"{label}: negative Betti numbers b^2={b2}, b^3={b3}")
    return BlockInvariants(label, xbar.chi - d_chi, xbar.tau, Stage.X, {2: b2, 3: b3}, xbar.sing_points, xbar.notes)


QUOTIENT_NOTE = ("b^2(Z) = b^2(X)^sigma = 0 and b^3(Z) = b^3(X)^sigma = 0: H^2(X) is spanned by the "
                 "Kahler class, which is not sigma-invariant (Kovalev, b^1(Y) = b^2(Y) = 0)")


def quotient(x: BlockInvariants, fixed_points: int, label: str = "Z") -> BlockInvariants:
    """Divide by the antiholomorphic involution sigma with isolated fixed points.

    chi(Z) = (chi(X) + k)/2 and tau(Z) = (tau(X) + k)/2 for k fixed points.
    """
    _require(x, Stage.X, "quotient")
    if fixed_points < 0:
        raise ValueError("fixed point count must be >= 0")
    chi = _halve(x.chi + fixed_points, f"chi({x.label}) + k = {x.chi} + {fixed_points}")
    tau = _halve(x.tau + fixed_points, f"tau({x.label}) + k = {x.tau} + {fixed_points}")
    return BlockInvariants(label, chi, tau, Stage.Z, {2: 0, 3: 0}, fixed_points, x.notes + (QUOTIENT_NOTE,))


def glue(z1: BlockInvariants, z2: BlockInvariants, label: str = "Mtriangle") -> BlockInvariants:
    """Glue two quotient blocks along their common cross-section.

    chi and tau add; Mayer-Vietoris with b^2(Z_i) = b^3(Z_i) = 0 gives
    b^1 = b^2 = b^3 = 0, hence b^4 = chi - 2.
    """
    _require(z1, Stage.Z, "glue")
    _require(z2, Stage.Z, "glue")
    for z in (z1, z2):
        if z.betti.get(2, 0) or z.betti.get(3, 0):
            raise InconsistencyError(f"{z.label}: gluing formula assumes b^2 = b^3 = 0")
    chi = z1.chi + z2.chi
    betti = {0: 1, 1: 0, 2: 0, 3: 0, 4: chi - 2, 5: 0, 6: 0, 7: 0, 8: 1}
    if betti[4] < 0:
        raise InconsistencyError(f"b^4 = {chi} - 2 < 0")
    notes = tuple(dict.fromkeys(z1.notes + z2.notes))
    return BlockInvariants(label, chi, z1.tau + z2.tau, Stage.MTRIANGLE, betti,
                           z1.sing_points + z2.sing_points, notes)


def a_hat(chi: int, tau: int) -> int:
    """A-hat genus from 48 A = 3 tau - chi; must divide exactly."""
    value = 3 * tau - chi
    if value % 48:
        raise InconsistencyError(f"3*{tau} - {chi} = {value} is not divisible by 48")
    return value // 48


def classify_holonomy(ahat: int, simply_connected: bool) -> Holonomy:
    if not simply_connected:
        return Holonomy.INDETERMINATE
    return _HOLONOMY_BY_AHAT.get(ahat, Holonomy.INDETERMINATE)


@dataclass(frozen=True)
class GluingReport:
    final: BlockInvariants
    a_hat: int
    holonomy: Holonomy
    assumption_log: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"final": self.final.to_dict(), "A_hat": self.a_hat, "holonomy": self.holonomy.value,
                "assumption_log": list(self.assumption_log)}

    @classmethod
    def from_dict(cls, d: Mapping) -> GluingReport:
        return cls(BlockInvariants.from_dict(d["final"]), d["A_hat"], Holonomy(d["holonomy"]),
                   tuple(d.get("assumption_log", ())))


SIMPLY_CONNECTED_NOTE = "M is simply connected (asserted for the gluing construction, not computed)"
RESOLUTION_NOTE = ("each singular point is replaced by an ALE Spin(7) piece with b^4 = 1, chi = 2 "
                   "(Joyce 15.1.1, 15.2.3)")


def _report(final: BlockInvariants, simply_connected: bool, strict: bool) -> GluingReport:
    ahat = a_hat(final.chi, final.tau)
    holonomy = classify_holonomy(ahat, simply_connected)
    if strict and simply_connected and holonomy is Holonomy.INDETERMINATE:
        raise ClassificationError(f"A-hat = {ahat} is not in 1..4 for a simply connected manifold")
    log = final.notes + ((SIMPLY_CONNECTED_NOTE,) if simply_connected else ())
    return GluingReport(replace(final, notes=()), ahat, holonomy, log)


def resolve(mt: BlockInvariants, simply_connected: bool = False, label: str = "M") -> GluingReport:
    """Resolve the k isolated singular points by ALE Spin(7) pieces.

    chi += k, tau -= k, b^4 += k, other Betti numbers unchanged; then
    A-hat = (3 tau - chi)/48 and the holonomy from the A-hat table.
    """
    _require(mt, Stage.MTRIANGLE, "resolve")
    k = mt.sing_points
    betti = dict(mt.betti)
    if 4 in betti:
        betti[4] += k
    final = BlockInvariants(label, mt.chi + k, mt.tau - k, Stage.M, betti, 0, mt.notes + (RESOLUTION_NOTE,))
    return _report(final, simply_connected, strict=True)


def crepant_block(xbar: BlockInvariants, label: str = "Xhat") -> BlockInvariants:
    """Crepant resolution of every C^4/Z_4 point by K_{CP^3} (chi = 4).

    chi(Xhat) = chi(Xbar) - k + 4k = chi(Xbar) + 3k, tau(Xhat) = tau(Xbar) - k.
    """
    _require(xbar, Stage.XBAR, "crepant_block")
    k = xbar.sing_points
    return BlockInvariants(label, xbar.chi + 3 * k, xbar.tau - k, Stage.XHAT, {}, 0,
                           xbar.notes + ("C^4/Z_4 has the unique crepant resolution K_{CP^3}, chi = 4",))


def cy_double(xhat: BlockInvariants, d_chi: int, simply_connected: bool = False,
              label: str = "M") -> GluingReport:
    """Double the crepant block along its cylindrical end.

    chi(M) = 2 (chi(Xhat) - chi(D)), tau(M) = 2 tau(Xhat) - tau(D x CP^1)
    = 2 tau(Xhat).
    """
    _require(xhat, Stage.XHAT, "cy_double")
    final = BlockInvariants(label, 2 * (xhat.chi - d_chi), 2 * xhat.tau, Stage.M, {}, 0, xhat.notes)
    return _report(final, simply_connected, strict=False)
