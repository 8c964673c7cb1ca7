"""Command-line front end: ``python -m spin7kit <command>``.

Exit status is 0 on success, 2 when an identity fails or a reproduced value
deviates from its published counterpart, and 1 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import cayley, chern, cohomology, scenarios, series, wps
from .errors import (ClassificationError, InconsistencyError, ScenarioError, StageError,
                     UnsupportedStratumError)

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _out(args, payload: dict, text: str, warnings: Sequence[str] = ()) -> int:
    if args.format == "json":
        sys.stdout.write(json.dumps({"schema_version": scenarios.SCHEMA_VERSION, **payload,
                                     "warnings": list(warnings)}, indent=2) + "\n")
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")
        for w in warnings:
            sys.stdout.write(f"warning: {w}\n")
    return EXIT_INCONSISTENT if args.strict and warnings else EXIT_OK


def cmd_check(args) -> int:
    scenario = scenarios.load_scenario(args.scenario)
    rows, ok = [], True
    for block in scenario.blocks:
        report = wps.check_conditions(block.construction)
        ok &= report.ok
        rows += [{"block": block.label, "label": r.label, "status": r.status, "detail": r.detail} for r in report]
        for s in wps.singular_strata(block.construction.weights):
            rows.append({"block": block.label, "label": f"stratum {s.support}",
                         "status": "PASS" if wps.is_scalar_z4_action(s) else "FAIL",
                         "detail": f"Z_{s.group_order} acting with weights {s.action_weights}"})
    text = "\n".join(f"{r['block']:<6} {r['label']:<16} {r['status']:<9} {r['detail']}" for r in rows)
    warnings = [f"{r['block']}: {r['label']} has no assertion" for r in rows if r["status"] == "MISSING"]
    code = _out(args, {"scenario": scenario.name, "conditions": rows}, text, warnings)
    return code if ok else EXIT_INCONSISTENT


def cmd_hilbert(args) -> int:
    if args.jacobian is not None:
        spec = series.jacobian_spec(args.weights or (), args.jacobian, args.order)
    else:
        if args.num is None or args.den is None:
            raise UsageError("give --num and --den, or --weights with --jacobian D")
        spec = series.RationalSeriesSpec(args.num, args.den, args.order)
    s = series.expand(spec)
    text = f"{spec}  (order {s.order})\n" + " ".join(str(c) for c in s.coeffs)
    payload = {"numerator": list(spec.numerator), "denominator": list(spec.denominator),
               "order": s.order, "coefficients": list(s.coeffs)}
    if args.coefficient is not None:
        c = series.graded_dimension(spec, args.coefficient)
        payload["coefficient"] = {"m": args.coefficient, "value": c}
        text += f"\nt^{args.coefficient}: {c}"
    return _out(args, payload, text)


def cmd_hodge(args) -> int:
    if args.degrees is None or len(args.degrees) == 1:
        d = args.degrees[0] if args.degrees else args.degree
        if d is None:
            raise UsageError("give --degree D (hypersurface) or --degrees D1,D2,...")
        diamond = cohomology.hypersurface_hodge(args.weights, d)
        payload = {"weights": list(args.weights), "degree": d, "diamond": diamond.to_dict(),
                   "euler": diamond.euler(), "betti": list(diamond.betti())}
        text = f"{diamond.pretty()}\n\nchi = {diamond.euler()}, betti = {diamond.betti()}"
        return _out(args, payload, text)
    dim = len(args.weights) - 1 - len(args.degrees)
    values = {q: cohomology.ci_h0q(args.weights, args.degrees, 0, q) for q in range(dim + 1)}
    text = "\n".join(f"h^{{0,{q}}} = {v}" for q, v in values.items())
    return _out(args, {"weights": list(args.weights), "degrees": list(args.degrees),
                       "h0q": {str(q): v for q, v in values.items()}}, text)


def cmd_euler(args) -> int:
    if args.kind == "ci":
        value = chern.euler_ci(args.ambient, args.degrees)
        note = chern.misprint_note(args.ambient, args.degrees)
        return _out(args, {"ambient": args.ambient, "degrees": list(args.degrees), "chi": value},
                    f"chi = {value}", [note] if note else [])
    value = chern.branched_euler(args.cover, args.branch, args.sheets)
    return _out(args, {"cover": args.cover, "branch": args.branch, "sheets": args.sheets, "chi": value},
                f"chi = ({args.cover} + {args.sheets - 1}*({args.branch}))/{args.sheets} = {value}")


def _deviation_code(args, report: scenarios.Report) -> int:
    if report.deviations:
        for c in report.deviations:
            print(f"deviation: {c.quantity} published {c.published}, computed {c.computed}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.strict and report.warnings:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_pipeline(args) -> int:
    report = scenarios.run(scenarios.load_scenario(args.scenario))
    sys.stdout.write(scenarios.emit(report, args.format))
    return _deviation_code(args, report)


def cmd_reproduce(args) -> int:
    names = scenarios.builtin_names() if args.name == "all" else [args.name]
    unknown = [n for n in names if n not in scenarios.BUILTINS]
    if unknown:
        raise UsageError(f"unknown built-in scenario {unknown[0]!r}; choose from {scenarios.builtin_names()}")

    def one(name):
        return scenarios.run(scenarios.load_scenario(name))

    with ThreadPoolExecutor() as pool:
        reports = list(pool.map(one, names))
    if args.format == "json" and len(reports) > 1:
        sys.stdout.write(json.dumps({"schema_version": scenarios.SCHEMA_VERSION,
                                     "reports": [r.to_dict() for r in reports]}, indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write(scenarios.emit(r, args.format))
    codes = [_deviation_code(args, r) for r in reports]
    if len(reports) > 1 and args.format == "text":
        for r, code in zip(reports, codes):
            print(f"{r.scenario:<10} {'ok' if code == EXIT_OK else 'DEVIATES'}")
    return max(codes)


def cmd_cayley(args) -> int:
    report = cayley.cayley_report()
    failed = [k for k, v in report.items() if v is False]
    text = "\n".join(f"{k:<40} {v}" for k, v in report.items())
    code = _out(args, {"cayley": report}, text)
    return EXIT_INCONSISTENT if failed else code


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="treat warnings as errors")

    p = _Parser(prog="spin7kit", description="Exact invariants of glued Spin(7)-manifolds.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="construction conditions of a scenario")
    c.add_argument("scenario", help="built-in name or scenario file")
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hilbert", parents=[common], help="expand prod(1-t^e)/prod(1-t^a)")
    h.add_argument("--num", type=_ints, help="numerator exponents, e.g. 7,7,7,7")
    h.add_argument("--den", type=_ints, help="denominator exponents")
    h.add_argument("--weights", type=_ints, help="weights, with --jacobian")
    h.add_argument("--jacobian", type=int, metavar="D", help="Jacobian ring of a degree-D form")
    h.add_argument("--order", type=int, help="series truncation order")
    h.add_argument("--coefficient", type=int, metavar="M", help="also print the t^M coefficient")
    h.set_defaults(func=cmd_hilbert)

    o = sub.add_parser("hodge", parents=[common], help="Hodge numbers of a weighted hypersurface")
    o.add_argument("--weights", type=_ints, required=True)
    o.add_argument("--degree", type=int)
    o.add_argument("--degrees", type=_ints, help="multidegree; more than one gives h^{0,q} only")
    o.set_defaults(func=cmd_hodge)

    e = sub.add_parser("euler", parents=[common], help="Euler characteristics")
    esub = e.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    ci = esub.add_parser("ci", parents=[common], help="smooth complete intersection in CP^n")
    ci.add_argument("--ambient", type=int, required=True)
    ci.add_argument("--degrees", type=_ints, required=True)
    br = esub.add_parser("branched", parents=[common], help="base of a branched cover")
    br.add_argument("--cover", type=int, required=True)
    br.add_argument("--branch", type=int, required=True)
    br.add_argument("--sheets", type=int, required=True)
    e.set_defaults(func=cmd_euler)

    pl = sub.add_parser("pipeline", parents=[common], help="run a scenario and print its trace")
    pl.add_argument("scenario", help="built-in name or scenario file")
    pl.set_defaults(func=cmd_pipeline)

    r = sub.add_parser("reproduce", parents=[common], help="run built-in scenarios against published values")
    r.add_argument("name", help=f"one of {', '.join(scenarios.BUILTINS)} or 'all'")
    r.set_defaults(func=cmd_reproduce)

    cy = sub.add_parser("cayley", parents=[common], help="Spin(7) linear-algebra identities")
    cy.add_argument("action", choices=("verify",))
    cy.set_defaults(func=cmd_cayley)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.format = getattr(args, "format", "text")
        args.strict = getattr(args, "strict", False)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, ClassificationError, StageError) as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, UnsupportedStratumError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
