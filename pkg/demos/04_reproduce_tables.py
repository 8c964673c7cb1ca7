"""Run every built-in scenario and the YAML files next to this script.

The same thing from the shell:
    python -m spin7kit reproduce all
    python -m spin7kit pipeline demos/scenarios/m12.yaml

Run:  python demos/04_reproduce_tables.py
"""
from pathlib import Path

from spin7kit import scenarios

print(f"{'scenario':<20} {'tau':>6} {'chi':>6} {'b4':>6} {'A-hat':>6}  holonomy     checks")
for path in sorted((Path(__file__).parent / "scenarios").glob("*.yaml")):
    try:
        report = scenarios.run(scenarios.load_scenario(str(path)))
    except ValueError as exc:
        print(f"{path.stem:<20} aborted: {exc}")
        continue
    f = report.final.final
    ok = sum(c.status == "ok" for c in report.checks)
    print(f"{path.stem:<20} {f.tau:>6} {f.chi:>6} {str(f.betti.get(4, '-')):>6} {report.final.a_hat:>6}  "
          f"{report.final.holonomy.value:<12} {ok}/{len(report.checks)} ok")
    for w in report.warnings:
        print(f"{'':<20} ! {w[:100]}")

# the full trace of the mixed gluing
print()
print(scenarios.emit(scenarios.run(scenarios.load_scenario("m12")), "text"))
