"""Scenario files, the built-in reproduction scenarios, and reports.

A scenario describes one or two building blocks (weights, degrees of the
cutting equations, carried assertions and cited input values) and how they
are assembled.  :func:`run` evaluates the full invariant chain and records
every intermediate equation in a :class:`Report`.

Scenario schema (YAML or JSON, ``schema_version: 1``)::

    schema_version: 1
    name: <string>
    kind: spin7_double | spin7_glue | cy_double
    simply_connected: {value: <bool>, provenance: <p>, ref: <string>}
    blocks:                      # one block, or two for spin7_glue
      - label: <string>
        weights: [a_0, ..., a_n]
        v_degrees: [d_1, ..., d_{k-1}]
        d_degree: d_k
        s_degree: d_{k+1}
        equations:               # optional
          v: [<polynomial in z0..zn>, ...]
          d: <polynomial>
          s: <polynomial>
        assertions:              # optional; names from wps.ASSERTION_NAMES
          <name>: {value: <bool>, provenance: <p>, ref: <string>}
        inputs:
          tau_V: {value: <int>, provenance: <p>, ref: <string>}          # required
          fixed_points: {value: <int>, provenance: <p>, ref: <string>}
          h11_D: {value: <int>, provenance: <p>, ref: <string>}
          diamond_V | diamond_D | diamond_S: {rows: [[...], ...], provenance: <p>, ref: <string>}
    published:                   # optional values to compare against
      <quantity>: {value: <int or string>, ref: <string>, erratum: <string, optional>}

``provenance`` is one of ``published``, ``derived`` or ``assumed``; every
input must say where its number comes from.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from . import chern, cohomology, pipeline, wps
from .cohomology import HodgeDiamond, SurfaceInvariants
from .errors import InconsistencyError, ScenarioError
from .pipeline import BlockInvariants, GluingReport, Stage
from .polynomial import parse_polynomial, restrict, weighted_degrees

SCHEMA_VERSION = 1
KINDS = ("spin7_double", "spin7_glue", "cy_double")
PROVENANCES = ("published", "derived", "assumed")
INPUT_VALUES = ("tau_V", "fixed_points", "h11_D")
INPUT_DIAMONDS = ("diamond_V", "diamond_D", "diamond_S")


@dataclass(frozen=True)
class Sourced:
    value: Any
    provenance: str
    ref: str

    def cite(self) -> str:
        return f"{self.provenance}: {self.ref}"


@dataclass(frozen=True)
class BlockSpec:
    label: str
    construction: wps.ConstructionConfig
    equations: Mapping[str, Any] = field(default_factory=dict)
    inputs: Mapping[str, Sourced] = field(default_factory=dict)


@dataclass(frozen=True)
class Published:
    value: Any
    ref: str
    erratum: str | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    kind: str
    blocks: tuple[BlockSpec, ...]
    simply_connected: Sourced
    published: Mapping[str, Published] = field(default_factory=dict)


# --- schema validation -------------------------------------------------------

def _check_keys(d: Any, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> None:
    if not isinstance(d, dict):
        raise ScenarioError(path, f"expected a mapping, got {type(d).__name__}")
    unknown = set(d) - set(required) - set(optional)
    if unknown:
        raise ScenarioError(path, f"unknown field(s) {sorted(map(str, unknown))}")
    missing = [k for k in required if k not in d]
    if missing:
        raise ScenarioError(path, f"missing field(s) {missing}")


def _int(x: Any, path: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ScenarioError(path, f"expected an integer, got {x!r}")
    return x


def _int_list(x: Any, path: str) -> tuple[int, ...]:
    if not isinstance(x, list):
        raise ScenarioError(path, f"expected a list of integers, got {x!r}")
    return tuple(_int(v, f"{path}[{i}]") for i, v in enumerate(x))


def _str(x: Any, path: str) -> str:
    if not isinstance(x, str) or not x.strip():
        raise ScenarioError(path, f"expected a non-empty string, got {x!r}")
    return x


def _provenance(d: dict, path: str) -> tuple[str, str]:
    p = d["provenance"]
    if p not in PROVENANCES:
        raise ScenarioError(f"{path}.provenance", f"must be one of {PROVENANCES}, got {p!r}")
    return p, _str(d["ref"], f"{path}.ref")


def _sourced(d: Any, path: str, kind: type) -> Sourced:
    _check_keys(d, path, ("value", "provenance", "ref"))
    value = d["value"]
    if kind is bool:
        if not isinstance(value, bool):
            raise ScenarioError(f"{path}.value", f"expected true/false, got {value!r}")
    else:
        value = _int(value, f"{path}.value")
    return Sourced(value, *_provenance(d, path))


def _diamond(d: Any, path: str) -> Sourced:
    _check_keys(d, path, ("rows", "provenance", "ref"))
    rows = d["rows"]
    if not isinstance(rows, list):
        raise ScenarioError(f"{path}.rows", "expected a list of rows")
    rows = [list(_int_list(r, f"{path}.rows[{i}]")) for i, r in enumerate(rows)]
    try:
        diamond = HodgeDiamond.from_rows(rows)
    except ValueError as exc:
        raise ScenarioError(f"{path}.rows", str(exc)) from None
    return Sourced(diamond, *_provenance(d, path))


def _block(d: Any, path: str) -> BlockSpec:
    _check_keys(d, path, ("label", "weights", "v_degrees", "d_degree", "s_degree", "inputs"),
                ("equations", "assertions"))
    label = _str(d["label"], f"{path}.label")
    try:
        weights = wps.Weights(_int_list(d["weights"], f"{path}.weights"))
    except ValueError as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(f"{path}.weights", str(exc)) from None
    assertions = {}
    raw_assert = d.get("assertions", {})
    _check_keys(raw_assert, f"{path}.assertions", (), wps.ASSERTION_NAMES)
    for name, entry in raw_assert.items():
        s = _sourced(entry, f"{path}.assertions.{name}", bool)
        assertions[name] = (s.value, s.cite())
    try:
        construction = wps.ConstructionConfig(
            weights, _int_list(d["v_degrees"], f"{path}.v_degrees"),
            _int(d["d_degree"], f"{path}.d_degree"), _int(d["s_degree"], f"{path}.s_degree"), assertions)
    except ValueError as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(path, str(exc)) from None

    equations: dict[str, Any] = {}
    raw_eq = d.get("equations", {})
    _check_keys(raw_eq, f"{path}.equations", (), ("v", "d", "s"))
    nvars = len(weights)
    expected = {"d": construction.d_degree, "s": construction.s_degree}
    for key, text in raw_eq.items():
        texts = text if key == "v" else [text]
        if key == "v" and (not isinstance(text, list) or len(text) != len(construction.v_degrees)):
            raise ScenarioError(f"{path}.equations.v", f"expected {len(construction.v_degrees)} polynomials")
        polys = []
        for i, t in enumerate(texts):
            sub = f"{path}.equations.{key}" + (f"[{i}]" if key == "v" else "")
            try:
                poly = parse_polynomial(_str(t, sub), nvars)
            except ValueError as exc:
                if isinstance(exc, ScenarioError):
                    raise
                raise ScenarioError(sub, str(exc)) from None
            degree = construction.v_degrees[i] if key == "v" else expected[key]
            if weighted_degrees(poly, weights.a) != {degree}:
                raise ScenarioError(sub, f"not weighted homogeneous of degree {degree}")
            polys.append(poly)
        equations[key] = tuple(polys) if key == "v" else polys[0]

    raw_in = d["inputs"]
    _check_keys(raw_in, f"{path}.inputs", ("tau_V",), INPUT_VALUES[1:] + INPUT_DIAMONDS)
    inputs = {}
    for name, entry in raw_in.items():
        sub = f"{path}.inputs.{name}"
        inputs[name] = _diamond(entry, sub) if name in INPUT_DIAMONDS else _sourced(entry, sub, int)
    return BlockSpec(label, construction, equations, inputs)


def parse_scenario(d: Any) -> Scenario:
    """Validate a scenario mapping; errors carry the offending field path."""
    _check_keys(d, "", ("schema_version", "name", "kind", "simply_connected", "blocks"), ("published",))
    if d["schema_version"] != SCHEMA_VERSION:
        raise ScenarioError("schema_version", f"unsupported version {d['schema_version']!r}")
    name = _str(d["name"], "name")
    kind = d["kind"]
    if kind not in KINDS:
        raise ScenarioError("kind", f"must be one of {KINDS}, got {kind!r}")
    if not isinstance(d["blocks"], list):
        raise ScenarioError("blocks", "expected a list")
    blocks = tuple(_block(b, f"blocks[{i}]") for i, b in enumerate(d["blocks"]))
    need = 2 if kind == "spin7_glue" else 1
    if len(blocks) != need:
        raise ScenarioError("blocks", f"kind {kind} needs {need} block(s), got {len(blocks)}")
    published = {}
    raw_pub = d.get("published", {})
    if not isinstance(raw_pub, dict):
        raise ScenarioError("published", "expected a mapping")
    for q, entry in raw_pub.items():
        _check_keys(entry, f"published.{q}", ("value", "ref"), ("erratum",))
        published[q] = Published(entry["value"], _str(entry["ref"], f"published.{q}.ref"), entry.get("erratum"))
    return Scenario(name, kind, blocks, _sourced(d["simply_connected"], "simply_connected", bool), published)


def load_scenario(source: str | Path) -> Scenario:
    """Load a built-in scenario by name, or a YAML/JSON scenario file."""
    if isinstance(source, str) and source in BUILTINS:
        return parse_scenario(BUILTINS[source])
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError("", f"cannot read scenario {source!s}: {exc}") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError("", f"{source}: not valid YAML/JSON: {exc}") from None
    return parse_scenario(data)


# --- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class TraceLine:
    quantity: str
    equation: str
    value: Any
    source: str


@dataclass(frozen=True)
class Check:
    quantity: str
    published: Any
    computed: Any
    status: str  # ok, mismatch, erratum or missing
    ref: str


@dataclass(frozen=True)
class Report:
    scenario: str
    kind: str = ""
    conditions: tuple[tuple[str, str, str, str], ...] = ()
    trace: tuple[TraceLine, ...] = ()
    final: GluingReport | None = None
    checks: tuple[Check, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def deviations(self) -> list[Check]:
        return [c for c in self.checks if c.status in ("mismatch", "missing")]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "scenario": self.scenario,
            "kind": self.kind,
            "conditions": [{"block": b, "label": l, "status": s, "detail": t} for b, l, s, t in self.conditions],
            "trace": [vars(t).copy() for t in self.trace],
            "final": None if self.final is None else self.final.to_dict(),
            "A_hat": None if self.final is None else self.final.a_hat,
            "checks": [vars(c).copy() for c in self.checks],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> Report:
        return cls(
            d["scenario"], d.get("kind", ""),
            tuple((c["block"], c["label"], c["status"], c["detail"]) for c in d.get("conditions", [])),
            tuple(TraceLine(**t) for t in d.get("trace", [])),
            None if d.get("final") is None else GluingReport.from_dict(d["final"]),
            tuple(Check(**c) for c in d.get("checks", [])),
            tuple(d.get("warnings", [])),
        )


class _Recorder:
    def __init__(self):
        self.trace: list[TraceLine] = []
        self.values: dict[str, Any] = {}
        self.warnings: list[str] = []

    def __call__(self, quantity: str, value: Any, equation: str, source: str) -> Any:
        self.trace.append(TraceLine(quantity, equation, value, source))
        self.values[quantity] = value
        return value


SRC_CHERN = "total Chern class of a smooth complete intersection in CP^n"
SRC_COVER = "degree-m cover CP^n -> CP^n(1,..,1,m) branched along w_n = 0"
SRC_FLETCHER_HYP = "Fletcher Thm 7.2 (Jacobian ring of a quasismooth hypersurface)"
SRC_FLETCHER_CI = "Fletcher Lemma 7.1 (residue ring of a weighted complete intersection)"
SRC_BLOWUP = "blow-up along S with exceptional divisor E = S x CP^1"
SRC_OPEN = "Mayer-Vietoris for Xbar = X u U, X n U ~ D x S^1"
SRC_QUOTIENT = "isolated sigma-fixed points, each contributes +1 before halving"
SRC_GLUE = "Mayer-Vietoris for Mtriangle = Z_1 u Z_2 with b^2(Z_i) = b^3(Z_i) = 0"
SRC_RESOLVE = "ALE Spin(7) resolution of R^8/G, chi = 2, b^4 = 1 (Joyce 15.1.1, 15.10)"
SRC_AHAT = "48 A-hat = 3 tau - chi (Joyce Thm 10.6.1)"
SRC_CREPANT = "crepant resolution of C^4/Z_4 by K_{CP^3}, chi = 4"


def _count_fixed_points(block: BlockSpec, rec: _Recorder) -> int | None:
    """Count C^4/Z_4 points of V from its equations; None when not computable."""
    c = block.construction
    strata = wps.singular_strata(c.weights)
    v_eqs = block.equations.get("v")
    if c.v_degrees and v_eqs is None:
        return None
    total = 0
    for s in strata:
        where = f"stratum z_{{{','.join(map(str, s.support))}}}"
        if not wps.is_scalar_z4_action(s):
            raise InconsistencyError(
                f"{block.label}: {where} has action Z_{s.group_order}{s.action_weights}, not C^4/Z_4")
        if not c.v_degrees:
            if s.dimension != 0:
                raise InconsistencyError(f"{block.label}: V = W has a positive-dimensional singular {where}")
            total += 1
            continue
        if len(v_eqs) != 1:
            return None
        form = restrict(v_eqs[0], s.support)
        if not form:
            form = {tuple([0] * len(s.support)): 0}
        total += wps.count_stratum_points(form)
    rec(f"{block.label}.k_computed", total, "distinct zeros of the V-equations on the singular strata",
        "cyclic quotient strata of the weighted projective space")
    return total


def _evaluate_block(block: BlockSpec, rec: _Recorder) -> dict[str, Any]:
    """Compute V, D, S invariants and run V -> Xbar -> X; returns pieces."""
    c = block.construction
    lab = block.label
    w = c.weights
    inputs = block.inputs

    # fixed points / singular points
    k_computed = _count_fixed_points(block, rec)
    k_input = inputs.get("fixed_points")
    if k_computed is not None and k_input is not None and k_computed != k_input.value:
        raise InconsistencyError(f"{lab}: computed {k_computed} singular points, input says {k_input.value}")
    if k_computed is None and k_input is None:
        raise InconsistencyError(f"{lab}: cannot count singular points; supply inputs.fixed_points")
    k = k_computed if k_computed is not None else k_input.value
    rec(f"{lab}.k", k, "k = #Sing V = #V^sigma",
        k_input.cite() if k_input is not None and k_computed is None else "computed from the V-equations")

    # V
    heavy = chern.single_heavy_weight(w)
    diamond_v = inputs.get("diamond_V")
    if not c.v_degrees:
        chi_v = rec(f"{lab}.chi_V", chern.euler_wps(w), f"chi(CP^{w.n}{w.a}) = n + 1",
                    "weighted projective space has the rational cohomology of CP^n")
        betti_v = {i: int(i % 2 == 0) for i in range(2 * w.n + 1)}
    else:
        computed = cohomology.hypersurface_hodge(w, c.v_degrees[0]) if len(c.v_degrees) == 1 else None
        if computed is not None and diamond_v is not None and computed != diamond_v.value:
            raise InconsistencyError(f"{lab}: V diamond from the Jacobian ring differs from the input diamond")
        diamond = diamond_v.value if diamond_v is not None else computed
        if diamond is None:
            raise InconsistencyError(f"{lab}: V is not a hypersurface; supply inputs.diamond_V")
        source = diamond_v.cite() if diamond_v is not None else SRC_FLETCHER_HYP
        if computed is not None and diamond_v is not None:
            source += "; agrees with " + SRC_FLETCHER_HYP
        rec(f"{lab}.middle_V", list(diamond.middle_row()), "middle row h^{4-q,q}(V)", source)
        chi_v = rec(f"{lab}.chi_V", diamond.euler(), "chi(V) = sum (-1)^(p+q) h^{p,q}(V)", source)
        betti_v = dict(enumerate(diamond.betti()))
        if w.n - len(c.v_degrees) != 4:
            raise InconsistencyError(f"{lab}: V has dimension {w.n - len(c.v_degrees)}, not 4")
        rec(f"{lab}.hodge_index_V", cohomology.hodge_signature(diamond),
            "sum (-1)^q h^{p,q}(V) (smooth-case formula, informational)", source)
    tau_v = inputs["tau_V"]
    rec(f"{lab}.tau_V", tau_v.value, "tau(V) (orbifold signature, input)", tau_v.cite())
    naive = rec.values.get(f"{lab}.hodge_index_V")
    if naive is not None and naive != tau_v.value:
        rec.warnings.append(f"{lab}: tau(V) input {tau_v.value} differs from the Hodge-index sum {naive} "
                            f"over the V diamond; {k} orbifold point(s) may carry a signature defect")

    # D
    diamond_d = inputs.get("diamond_D")
    d_degrees = c.v_degrees + (c.d_degree,)
    chi_d_cover = None
    if heavy is not None and not c.v_degrees:
        route = chern.euler_weighted_ci(w, d_degrees)
        rec(f"{lab}.chi_D_cover", route.chi_cover,
            f"chi(D~) = {'*'.join(map(str, d_degrees))} [h^{w.n - len(d_degrees)}] (1+h)^{w.n + 1}/"
            + "".join(f"(1+{d}h)" for d in d_degrees), SRC_CHERN)
        rec(f"{lab}.chi_D_branch", route.chi_branch,
            f"chi(D~ n Sigma~), degrees {d_degrees} in CP^{w.n - 1}", SRC_CHERN)
        chi_d_cover = rec(f"{lab}.chi_D_via_cover", route.chi,
                          f"chi(D) = ({route.chi_cover} + {route.sheets - 1}*({route.chi_branch}))/{route.sheets}",
                          SRC_COVER)
    diamond = None
    if diamond_d is not None:
        diamond, source = diamond_d.value, diamond_d.cite()
    elif not c.v_degrees:
        diamond, source = cohomology.hypersurface_hodge(w, c.d_degree), SRC_FLETCHER_HYP
    if diamond is None:
        raise InconsistencyError(f"{lab}: supply inputs.diamond_D for a complete-intersection D")
    rec(f"{lab}.h21_D", diamond[2, 1], "h^{2,1}(D)", source)
    chi_d = rec(f"{lab}.chi_D", diamond.euler(), "chi(D) = sum (-1)^(p+q) h^{p,q}(D)", source)
    if chi_d_cover is not None and chi_d_cover != chi_d:
        raise InconsistencyError(f"{lab}: chi(D) = {chi_d} from Hodge numbers but {chi_d_cover} via the cover")
    h11 = diamond[1, 1]
    if "h11_D" in inputs:
        if inputs["h11_D"].value != h11:
            raise InconsistencyError(f"{lab}: h^{{1,1}}(D) input {inputs['h11_D'].value} != diamond value {h11}")
        source = inputs["h11_D"].cite()
    b2_d = rec(f"{lab}.b2_D", h11, "b^2(D) = h^{1,1}(D)", source)
    betti_d = cohomology.cy3_betti(chi_d, h11)
    rec(f"{lab}.b3_D", betti_d[3], f"b^3(D) = 2 + 2(h^{{1,1}} - chi/2) = 2 + 2({h11} - ({chi_d})/2)",
        "Calabi-Yau threefold with h^{1,0} = h^{2,0} = 0")

    # S
    s_degrees = c.degrees
    h02 = rec(f"{lab}.h02_S", cohomology.ci_h0q(w, s_degrees, 0, 2),
              f"h^{{0,2}}(S) = dim A_alpha, alpha = {sum(s_degrees)} - {sum(w.a)} = {sum(s_degrees) - sum(w.a)}",
              SRC_FLETCHER_CI)
    diamond_s = inputs.get("diamond_S")
    chi_s = None
    if heavy is not None and not c.v_degrees:
        route = chern.euler_weighted_ci(w, s_degrees[-2:])
        rec(f"{lab}.chi_S_cover", route.chi_cover, f"chi(S~), degrees {route.degrees} in CP^{w.n}", SRC_CHERN)
        rec(f"{lab}.chi_S_branch", route.chi_branch, f"chi(S~ n Sigma~), degrees {route.degrees} in CP^{w.n - 1}",
            SRC_CHERN)
        chi_s = rec(f"{lab}.chi_S", route.chi,
                    f"chi(S) = ({route.chi_cover} + {route.sheets - 1}*({route.chi_branch}))/{route.sheets}",
                    SRC_COVER)
    if diamond_s is not None:
        ds = diamond_s.value
        if ds[0, 2] != h02:
            raise InconsistencyError(f"{lab}: input h^{{0,2}}(S) = {ds[0, 2]} but the residue ring gives {h02}")
        if chi_s is not None and ds.euler() != chi_s:
            raise InconsistencyError(f"{lab}: input chi(S) = {ds.euler()} but the cover route gives {chi_s}")
        if chi_s is None:
            chi_s = rec(f"{lab}.chi_S", ds.euler(), "chi(S) = sum (-1)^(p+q) h^{p,q}(S)", diamond_s.cite())
    if chi_s is None:
        raise InconsistencyError(f"{lab}: cannot compute chi(S); supply inputs.diamond_S")
    surface = cohomology.surface_from_chi_h02(chi_s, h02)
    rec(f"{lab}.h11_S", surface.diamond[1, 1], f"h^{{1,1}}(S) = {chi_s} - 2 - 2*{h02}", "b^1(S) = 0 (Lefschetz)")
    rec(f"{lab}.tau_S", surface.tau, "tau(S) = sum (-1)^q h^{p,q}(S)", "Hodge index theorem")

    # V -> Xbar -> X
    v_block = BlockInvariants(f"{lab}:V", chi_v, tau_v.value, Stage.V, betti_v, k)
    xbar = pipeline.blow_up(v_block, surface, f"{lab}:Xbar")
    rec(f"{lab}.chi_Xbar", xbar.chi, f"chi(Xbar) = chi(V) + chi(S) = {chi_v} + {chi_s}", SRC_BLOWUP)
    rec(f"{lab}.tau_Xbar", xbar.tau, f"tau(Xbar) = tau(V) - tau(S) = {tau_v.value} - ({surface.tau})", SRC_BLOWUP)
    rec(f"{lab}.b2_Xbar", xbar.b(2), f"b^2(Xbar) = b^2(V) + b^0(S) = {betti_v[2]} + 1", SRC_BLOWUP + " (DK87 1.10)")
    rec(f"{lab}.b3_Xbar", xbar.b(3), f"b^3(Xbar) = b^3(V) + b^1(S) = {betti_v[3]} + 0", SRC_BLOWUP + " (DK87 1.10)")
    x = pipeline.open_part(xbar, chi_d, b2_d, f"{lab}:X")
    rec(f"{lab}.chi_X", x.chi, f"chi(X) = chi(Xbar) - chi(D) = {xbar.chi} - ({chi_d})", SRC_OPEN)
    rec(f"{lab}.tau_X", x.tau, "tau(X) = (2 tau(Xbar) - tau(D x CP^1))/2 = tau(Xbar)", SRC_OPEN)
    rec(f"{lab}.b2_X", x.b(2), f"b^2(X) = b^2(Xbar) - 1 = {xbar.b(2)} - 1", SRC_OPEN + " (KL11 2.10)")
    rec(f"{lab}.b3_X", x.b(3), f"b^3(X) = b^3(Xbar) + b^2(D) - b^2(X) = {xbar.b(3)} + {b2_d} - {x.b(2)}",
        SRC_OPEN + " (KL11 2.10)")
    return {"k": k, "xbar": xbar, "x": x, "chi_d": chi_d, "surface": surface}


def _quotient(lab: str, parts: dict, rec: _Recorder) -> BlockInvariants:
    x, k = parts["x"], parts["k"]
    z = pipeline.quotient(x, k, f"{lab}:Z")
    rec(f"{lab}.chi_Z", z.chi, f"chi(Z) = (chi(X) + k)/2 = ({x.chi} + {k})/2", SRC_QUOTIENT)
    rec(f"{lab}.tau_Z", z.tau, f"tau(Z) = (tau(X) + k)/2 = ({x.tau} + {k})/2", SRC_QUOTIENT)
    return z


def _finish(final: GluingReport, rec: _Recorder) -> None:
    f = final.final
    rec("M.A_hat", final.a_hat, f"A-hat = (3 tau - chi)/48 = (3*{f.tau} - {f.chi})/48", SRC_AHAT)
    rec("M.holonomy", final.holonomy.value, f"holonomy for A-hat = {final.a_hat}", "Joyce Thm 10.6.1 table")


def run(s: Scenario) -> Report:
    """Evaluate a scenario end to end.  Raises on any failed identity."""
    rec = _Recorder()
    conditions = []
    for block in s.blocks:
        report = wps.check_conditions(block.construction)
        for r in report:
            conditions.append((block.label, r.label, r.status, r.detail))
        if not report.ok:
            bad = "; ".join(f"{r.label}: {r.detail}" for r in report.failures())
            raise InconsistencyError(f"{block.label}: construction condition failed: {bad}")
        missing = [r.label for r in report if r.status == "MISSING"]
        if missing:
            rec.warnings.append(f"{block.label}: no assertion supplied for condition(s) {', '.join(missing)}")

    parts = [_evaluate_block(b, rec) for b in s.blocks]
    sc = s.simply_connected.value

    if s.kind in ("spin7_double", "spin7_glue"):
        labels = [b.label for b in s.blocks]
        if s.kind == "spin7_double":
            z = _quotient(labels[0], parts[0], rec)
            z1, z2 = z, z
        else:
            if parts[0]["chi_d"] != parts[1]["chi_d"]:
                raise InconsistencyError("glued blocks have different divisors D (chi differs)")
            z1 = _quotient(labels[0], parts[0], rec)
            z2 = _quotient(labels[1], parts[1], rec)
        mt = pipeline.glue(z1, z2)
        rec("Mtriangle.chi", mt.chi, f"chi(Mtriangle) = {z1.chi} + {z2.chi}", SRC_GLUE)
        rec("Mtriangle.tau", mt.tau, f"tau(Mtriangle) = {z1.tau} + {z2.tau}", SRC_GLUE)
        rec("Mtriangle.b4", mt.b(4), f"b^4(Mtriangle) = chi - 2 = {mt.chi} - 2", SRC_GLUE)
        rec("Mtriangle.k", mt.sing_points, f"k = {z1.sing_points} + {z2.sing_points}", SRC_GLUE)
        final = pipeline.resolve(mt, simply_connected=sc)
        f = final.final
        rec("M.chi", f.chi, f"chi(M) = chi(Mtriangle) + k = {mt.chi} + {mt.sing_points}", SRC_RESOLVE)
        rec("M.tau", f.tau, f"tau(M) = tau(Mtriangle) - k = {mt.tau} - {mt.sing_points}", SRC_RESOLVE)
        for i in (2, 3):
            rec(f"M.b{i}", f.b(i), f"b^{i}(M) = b^{i}(Mtriangle)", SRC_RESOLVE)
        rec("M.b4", f.b(4), f"b^4(M) = b^4(Mtriangle) + k = {mt.b(4)} + {mt.sing_points}", SRC_RESOLVE)
    else:
        lab = s.blocks[0].label
        xbar = parts[0]["xbar"]
        xhat = pipeline.crepant_block(xbar, f"{lab}:Xhat")
        rec(f"{lab}.chi_Xhat", xhat.chi, f"chi(Xhat) = chi(Xbar) - k + 4k = {xbar.chi} + 3*{xbar.sing_points}",
            SRC_CREPANT)
        rec(f"{lab}.tau_Xhat", xhat.tau, f"tau(Xhat) = tau(Xbar) - k = {xbar.tau} - {xbar.sing_points}", SRC_CREPANT)
        final = pipeline.cy_double(xhat, parts[0]["chi_d"], simply_connected=sc)
        f = final.final
        rec("M.chi", f.chi, f"chi(M) = 2(chi(Xhat) - chi(D)) = 2({xhat.chi} - ({parts[0]['chi_d']}))",
            "doubling along D x S^1")
        rec("M.tau", f.tau, f"tau(M) = 2 tau(Xhat) - tau(D x CP^1) = 2*{xhat.tau} - 0", "doubling along D x S^1")
    _finish(final, rec)

    checks = []
    for q, pub in s.published.items():
        if q not in rec.values:
            checks.append(Check(q, pub.value, None, "missing", pub.ref))
            continue
        got = rec.values[q]
        if got == pub.value:
            status = "ok"
        elif pub.erratum:
            status = "erratum"
            rec.warnings.append(f"{q}: published value {pub.value} is a misprint; computed {got}. {pub.erratum}")
        else:
            status = "mismatch"
        checks.append(Check(q, pub.value, got, status, pub.ref))
    return Report(s.name, s.kind, tuple(conditions), tuple(rec.trace), final, tuple(checks), tuple(rec.warnings))


# --- emission ----------------------------------------------------------------

def emit(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(), indent=2, sort_keys=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"scenario: {r.scenario}" + (f" ({r.kind})" if r.kind else "")]
    if r.conditions:
        lines.append("")
        lines.append("conditions:")
        for block, label, status, detail in r.conditions:
            lines.append(f"  {block:<6} {label:<11} {status:<9} {detail}")
    lines.append("")
    lines.append("trace:")
    qw = max([len(t.quantity) for t in r.trace] + [8])
    vw = max([len(str(t.value)) for t in r.trace] + [5])
    lines.append(f"  {'quantity':<{qw}}  {'value':>{vw}}  equation  [source]")
    for t in r.trace:
        lines.append(f"  {t.quantity:<{qw}}  {str(t.value):>{vw}}  {t.equation}  [{t.source}]")
    if r.checks:
        lines.append("")
        lines.append("checks against published values:")
        for c in r.checks:
            lines.append(f"  {c.quantity:<{qw}}  published {str(c.published):>8}  computed {str(c.computed):>8}"
                         f"  {c.status}")
    if r.final is not None:
        f = r.final.final
        lines.append("")
        lines.append(f"final: chi={f.chi} tau={f.tau} "
                     + " ".join(f"b{i}={f.betti[i]}" for i in (2, 3, 4) if i in f.betti)
                     + f" A_hat={r.final.a_hat} holonomy={r.final.holonomy.value}")
        if r.final.assumption_log:
            lines.append("assumptions:")
            lines.extend(f"  - {a}" for a in r.final.assumption_log)
    if r.warnings:
        lines.append("")
        lines.append("warnings:")
        lines.extend(f"  ! {w}" for w in r.warnings)
    return "\n".join(lines) + "\n"


# --- built-in scenarios ------------------------------------------------------

def _src(value, provenance, ref):
    return {"value": value, "provenance": provenance, "ref": ref}


def _dia(rows, provenance, ref):
    return {"rows": rows, "provenance": provenance, "ref": ref}


_ASSERT_WEIGHTED = {
    "quasismooth": _src(True, "published", "Fermat-type equations; isolated C^4/Z_4 points"),
    "d_smooth": _src(True, "published", "D is a smooth Calabi-Yau divisor missing Sing V"),
    "s_smooth": _src(True, "published", "coefficients of f_{k+1} chosen so S is smooth"),
    "involution_free_on_d_and_s": _src(True, "published", "sigma^* f_i = conj(f_i), free on D and S"),
    "fixed_locus_is_singular_locus": _src(True, "published", "V^sigma = Sing V"),
}
_SIMPLY_CONNECTED = _src(True, "assumed", "the glued manifold is simply connected by construction")

_F_OCTIC_5 = "z0^8 + z1^8 + z2^8 + z3^8 + z4^2"
_F_OCTIC_6 = "z0^8 + z1^8 + z2^8 + z3^8 + z4^2 - z5^2"
_F_QUARTIC_6 = "z0^4 + z1^4 + z2^4 + z3^4 + 2*z4 + z5"

_OCTIC_BLOCK = {
    "label": "X",
    "weights": [1, 1, 1, 1, 4],
    "v_degrees": [],
    "d_degree": 8,
    "s_degree": 8,
    "equations": {"v": [], "d": _F_OCTIC_5, "s": "z0^8 + z1^8 + 2*z2^8 + 2*z3^8 + 3*z4^2"},
    "assertions": _ASSERT_WEIGHTED,
    "inputs": {
        "tau_V": _src(1, "published", "implied by tau(Xbar) = tau(V) - tau(S) = 577 with tau(S) = -576"),
        "fixed_points": _src(1, "published", "sigma fixes the single singular point [0,0,0,0,1]"),
    },
}

_TABLE_D = [[1], [0, 0], [0, 1, 0], [1, 149, 149, 1], [0, 1, 0], [0, 0], [1]]
_TABLE_V1 = [[1], [0, 0], [0, 1, 0], [0, 0, 0, 0], [0, 35, 232, 35, 0], [0, 0, 0, 0], [0, 1, 0], [0, 0], [1]]
_TABLE_V2 = [[1], [0, 0], [0, 1, 0], [0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0], [0, 1, 0], [0, 0], [1]]
_TABLE_S1 = [[1], [0, 0], [35, 232, 35], [0, 0], [1]]
_TABLE_S2 = [[1], [0, 0], [199, 976, 199], [0, 0], [1]]

_BLOCK_1 = {
    "label": "X1",
    "weights": [1, 1, 1, 1, 4, 4],
    "v_degrees": [8],
    "d_degree": 4,
    "s_degree": 4,
    "equations": {"v": [_F_OCTIC_6], "d": _F_QUARTIC_6},
    "assertions": _ASSERT_WEIGHTED,
    "inputs": {
        "tau_V": _src(162, "derived", "back-solved from the published tau(M11) = 320 through the tau chain"),
        "fixed_points": _src(2, "published", "two singular points [0,0,0,0,1,1] and [0,0,0,0,1,-1]"),
        "h11_D": _src(1, "published", "published Hodge diamond table, D"),
        "diamond_V": _dia(_TABLE_V1, "published", "published Hodge diamond table, V_1"),
        "diamond_D": _dia(_TABLE_D, "published", "published Hodge diamond table, D"),
        "diamond_S": _dia(_TABLE_S1, "published", "published Hodge diamond table, S_1"),
    },
}

_BLOCK_2 = {
    "label": "X2",
    "weights": [1, 1, 1, 1, 4, 4],
    "v_degrees": [4],
    "d_degree": 8,
    "s_degree": 8,
    "equations": {"v": [_F_QUARTIC_6], "d": _F_OCTIC_6},
    "assertions": _ASSERT_WEIGHTED,
    "inputs": {
        "tau_V": _src(1, "derived", "V_2 is CP^4(1,1,1,1,4) after eliminating z5 with the linear equation"),
        "fixed_points": _src(1, "published", "one singular point [0,0,0,0,1,-2]"),
        "h11_D": _src(1, "published", "published Hodge diamond table, D"),
        "diamond_V": _dia(_TABLE_V2, "published", "published Hodge diamond table, V_2"),
        "diamond_D": _dia(_TABLE_D, "published", "published Hodge diamond table, D"),
        "diamond_S": _dia(_TABLE_S2, "published", "published Hodge diamond table, S_2"),
    },
}


def _pub(value, ref, erratum=None):
    d = {"value": value, "ref": ref}
    if erratum:
        d["erratum"] = erratum
    return d


_OCTIC_PUBLISHED = {
    "X.chi_D_cover": _pub(-2096, "chi(D~) from total Chern classes"),
    "X.chi_D_branch": _pub(7808, "chi(D~ n Sigma~) as printed",
                           "The octic surface in CP^3 has chi = 8^3 - 4*8^2 + 6*8 = 304; only 304 gives "
                           "chi(D) = (-2096 + 3*304)/4 = -296. 7808 repeats chi(S~)."),
    "X.chi_D": _pub(-296, "smooth Calabi-Yau divisor D"),
    "X.h21_D": _pub(149, "h^{2,1}(D) = dim R(f)_8"),
    "X.b3_D": _pub(300, "Betti table of D"),
    "X.chi_S_cover": _pub(7808, "chi(S~)"),
    "X.chi_S_branch": _pub(-768, "chi(S~ n Sigma~)"),
    "X.chi_S": _pub(1376, "chi(S)"),
    "X.h02_S": _pub(199, "h^{0,2}(S) = dim A_8"),
    "X.h11_S": _pub(976, "Hodge diamond of S"),
    "X.tau_S": _pub(-576, "tau(S)"),
    "X.chi_V": _pub(5, "chi(CP^4(1,1,1,1,4))"),
    "X.chi_Xbar": _pub(1381, "chi(Xbar) = chi(V) + chi(S)"),
    "X.tau_Xbar": _pub(577, "tau(Xbar) = tau(V) - tau(S)"),
    "X.b2_Xbar": _pub(2, "b^2(Xbar) = b^2(V) + b^0(S)"),
    "X.b3_Xbar": _pub(0, "b^3(Xbar) = b^3(V) + b^1(S)"),
    "X.chi_X": _pub(1677, "chi(X) = chi(Xbar) - chi(D)"),
    "X.chi_Z": _pub(839, "chi(X/sigma) = (chi(X) + 1)/2"),
}

_SPIN7_FINAL_4 = {
    "Mtriangle.chi": _pub(1678, "chi(Mtriangle)"),
    "Mtriangle.tau": _pub(578, "tau(Mtriangle) = tau(X) + 1"),
    "Mtriangle.b4": _pub(1676, "b^4(Mtriangle)"),
    "M.chi": _pub(1680, "new Spin(7)-manifold"),
    "M.tau": _pub(576, "new Spin(7)-manifold"),
    "M.b2": _pub(0, "new Spin(7)-manifold"),
    "M.b3": _pub(0, "new Spin(7)-manifold"),
    "M.b4": _pub(1678, "new Spin(7)-manifold"),
    "M.A_hat": _pub(1, "A-hat(M) = 1"),
    "M.holonomy": _pub("Spin(7)", "holonomy Spin(7)"),
}


def _table2(tau, chi, b4, row):
    return {
        "M.tau": _pub(tau, f"published table of resulting manifolds, {row}"),
        "M.chi": _pub(chi, f"published table of resulting manifolds, {row}"),
        "M.b4": _pub(b4, f"published table of resulting manifolds, {row}"),
        "M.A_hat": _pub(1, "A-hat(M_ij) = 1 in each case"),
        "M.holonomy": _pub("Spin(7)", "compact Spin(7)-manifolds"),
    }


_TABLE1_PUBLISHED = {
    "X1.chi_V": _pub(306, "published Hodge diamond table, V_1"),
    "X1.chi_S": _pub(304, "published Hodge diamond table, S_1"),
    "X1.h02_S": _pub(35, "published Hodge diamond table, S_1"),
    "X1.k": _pub(2, "two singular points of V_1"),
    "X2.chi_V": _pub(5, "published Hodge diamond table, V_2"),
    "X2.chi_S": _pub(1376, "published Hodge diamond table, S_2"),
    "X2.h02_S": _pub(199, "published Hodge diamond table, S_2"),
    "X2.k": _pub(1, "one singular point of V_2"),
}


def _scenario(name, kind, blocks, published):
    return {"schema_version": SCHEMA_VERSION, "name": name, "kind": kind, "simply_connected": _SIMPLY_CONNECTED,
            "blocks": blocks, "published": published}


def _only(prefixes, table):
    return {q: v for q, v in table.items() if q.split(".")[0] in prefixes}


BUILTINS: dict[str, dict] = {
    "section4": _scenario("section4", "spin7_double", [_OCTIC_BLOCK],
                          {**_OCTIC_PUBLISHED, **_SPIN7_FINAL_4}),
    "cy-double": _scenario("cy-double", "cy_double", [_OCTIC_BLOCK], {
        **{q: v for q, v in _OCTIC_PUBLISHED.items() if q != "X.chi_Z"},
        "X.chi_Xhat": _pub(1384, "chi(Xhat) = chi(Xbar) - 1 + chi(E) = 1381 - 1 + 4"),
        "X.tau_Xhat": _pub(576, "tau(Xhat) = tau(Xbar) - 1"),
        "M.chi": _pub(3360, "chi(M) = 2(chi(Xhat) - chi(D))"),
        "M.tau": _pub(1152, "tau(M) = 2*576 - 0"),
        "M.A_hat": _pub(2, "A-hat(M) = 2"),
        "M.holonomy": _pub("SU(4)", "Calabi-Yau fourfold"),
    }),
    "m11": _scenario("m11", "spin7_double", [_BLOCK_1],
                     {**_only({"X1"}, _TABLE1_PUBLISHED), **_table2(320, 912, 910, "M11")}),
    "m12": _scenario("m12", "spin7_glue", [_BLOCK_1, _BLOCK_2],
                     {**_TABLE1_PUBLISHED, "X1.chi_Z": _pub(454, "derived from the published M12 row"),
                      **_table2(448, 1296, 1294, "M12")}),
    "m22": _scenario("m22", "spin7_double", [_BLOCK_2],
                     {**_only({"X2"}, _TABLE1_PUBLISHED), **_table2(576, 1680, 1678, "M22")}),
}


def builtin_names() -> list[str]:
    return list(BUILTINS)


class _PlainDumper(yaml.SafeDumper):
    def ignore_aliases(self, data):
        return True


def scenario_to_yaml(name: str) -> str:
    """Serialise a built-in scenario in the documented file format."""
    return yaml.dump(BUILTINS[name], Dumper=_PlainDumper, sort_keys=False, width=100, default_flow_style=None)
