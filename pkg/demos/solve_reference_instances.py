"""Solve the two bundled reference timetables and audit the results.

Run from the repository root:  python3 demos/solve_reference_instances.py
"""

from pathlib import Path

from breakmin import (
    count_breaks,
    format_ha,
    parse_ha,
    parse_timetable,
    solve_bmp,
    verify,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(name, reference_name):
    tt = parse_timetable((FIXTURES / name).read_text())
    print(f"=== {name}: {tt.n_teams} teams, {tt.n_slots} slots ===")
    report = solve_bmp(tt, solver="exact")
    print(f"minimum breaks: {report.b_min} (transversal size {report.oct_size})")
    lower, upper = report.bounds
    print(f"bounds: every schedule needs >= {lower}", end="")
    if upper is not None:
        print(f", and {upper} always suffices for this size", end="")
    print()
    print(f"solver visited {report.stats['nodes']} cut phases "
          f"in {report.stats['elapsed_s']:.3f}s")
    print(format_ha(report.assignment), end="")
    audit = verify(tt, report.assignment, claimed=report.b_min)
    print("audit:", "all checks pass" if audit.ok else "FAILED")
    reference = parse_ha((FIXTURES / reference_name).read_text())
    ref_breaks = count_breaks(reference).total
    print(f"bundled reference assignment also has {ref_breaks} breaks\n")
    assert ref_breaks == report.b_min


if __name__ == "__main__":
    run("tt4.csv", "tt4_ha.csv")
    run("tt8.csv", "tt8_ha.csv")
