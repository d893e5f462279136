"""Watch the repair loop fix an undecodable label map, step by step.

A label map can delete the minimum number of vertices and still not
decode into a schedule: around some match the labels force one team to
both venues.  This demo loads such a map, shows the offending match,
applies the local rewrite, and decodes the result.

Run from the repository root:  python3 demos/repair_walkthrough.py
"""

from pathlib import Path

from breakmin import (
    complete,
    count_breaks,
    find_earliest_inconsistent,
    format_ha,
    format_octmap,
    octmap_to_partial,
    parse_octmap,
    parse_timetable,
    repair_step,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def show(title, text):
    print(f"--- {title} ---")
    print(text, end="")
    print()


def walkthrough(tt_name, map_name):
    tt = parse_timetable((FIXTURES / tt_name).read_text())
    a = parse_octmap((FIXTURES / map_name).read_text())
    show(f"{map_name} (zero cells: {a.zero_count})", format_octmap(a))
    step = 0
    while True:
        rec = find_earliest_inconsistent(a, tt)
        if rec is None:
            break
        step += 1
        print(
            f"step {step}: match ({rec.cycle.t1} vs {rec.cycle.t2}) in slot "
            f"{rec.slot} is undecodable; team {rec.early_team} holds "
            f"{a.label(rec.early_team, rec.slot - 1)} at slot {rec.slot - 1}, "
            f"team {rec.late_team} holds {a.label(rec.late_team, rec.slot)} "
            f"at slot {rec.slot}"
        )
        a = repair_step(a, rec, tt)
        show(f"after step {step} (zero cells: {a.zero_count})", format_octmap(a))
    print(f"map is decodable after {step} step(s)")
    partial = octmap_to_partial(a, tt)
    show("decoded partial assignment", format_ha(partial))
    full = complete(partial, tt)
    show("completed assignment", format_ha(full))
    print(f"breaks: {count_breaks(full).total} (zero cells were {a.zero_count})\n")


if __name__ == "__main__":
    walkthrough("tt4.csv", "tt4_map_bad.csv")
    walkthrough("tt8.csv", "tt8_map.csv")
