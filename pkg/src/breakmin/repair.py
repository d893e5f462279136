"""Turning any valid label map into one that decodes to a schedule.

A valid label map can still be undecodable: around a match both teams
play, and the four cells the match spans (two teams, two adjacent
reduced slots) can carry labels that force one team to both venues at
once.  Exactly four 2x2 patterns do this.  Each occurrence can be fixed
by relabeling inside those four cells, keeping the map valid, keeping
the number of 0 cells, and never breaking an earlier slot, so sweeping
left to right terminates.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .auxgraph import RectangularCycle, build_aux_graph, rectangular_cycles
from .timetable import Timetable
from .transversal import OCTMap, octmap_is_valid

# rows are (cell at slot-1, cell at slot) for the cycle's two teams
_BAD_PATTERNS = (
    ((2, 0), (0, 1)),
    ((1, 0), (0, 2)),
    ((0, 1), (2, 0)),
    ((0, 2), (1, 0)),
)


class InconsistencyRecord(NamedTuple):
    """One undecodable match, plus the cells the fix may touch.

    `early_team` holds its nonzero label at slot-1, `late_team` at
    slot; `partner` is the opponent of late_team in slot-1.
    """

    cycle: RectangularCycle
    slot: int
    early_team: int
    late_team: int
    partner: int
    pattern: tuple[tuple[int, int], tuple[int, int]]


def _cycle_matrix(
    a: OCTMap, c: RectangularCycle
) -> tuple[tuple[int, int], tuple[int, int]]:
    s = c.slot
    return (
        (a.label(c.t1, s - 1), a.label(c.t1, s)),
        (a.label(c.t2, s - 1), a.label(c.t2, s)),
    )


def is_consistent_on_cycle(a: OCTMap, c: RectangularCycle) -> bool:
    """False when the cycle's labels match one of the undecodable patterns."""
    return _cycle_matrix(a, c) not in _BAD_PATTERNS


def is_locally_bipartite(a: OCTMap, c: RectangularCycle) -> bool:
    """True when no edge of the rectangle joins two equal nonzero labels."""
    ring = list(c.cells)
    for (t1, s1), (t2, s2) in zip(ring, ring[1:] + ring[:1]):
        l1, l2 = a.label(t1, s1), a.label(t2, s2)
        if l1 != 0 and l1 == l2:
            return False
    return True


def find_earliest_inconsistent(
    a: OCTMap, tt: Timetable
) -> Optional[InconsistencyRecord]:
    """First undecodable match in slot order, smaller team breaking ties."""
    for c in rectangular_cycles(tt):
        mat = _cycle_matrix(a, c)
        if mat not in _BAD_PATTERNS:
            continue
        if mat[0][0] != 0:
            early, late = c.t1, c.t2
        else:
            early, late = c.t2, c.t1
        return InconsistencyRecord(c, c.slot, early, late, tt.opp(late, c.slot - 1), mat)
    return None


def count_inconsistent(a: OCTMap, tt: Timetable) -> int:
    return sum(
        1 for c in rectangular_cycles(tt) if _cycle_matrix(a, c) in _BAD_PATTERNS
    )


def repair_step(a: OCTMap, rec: InconsistencyRecord, tt: Timetable) -> OCTMap:
    """Clear one inconsistency by relabeling around its match.

    Two candidate rewrites exist; three neighbor cells (late team one
    slot back, partner at slot-1 and one slot back) decide which one
    keeps the map valid.  The new map has the same number of 0 cells
    and strictly fewer undecodable matches.
    """
    s = rec.slot
    x = a.label(rec.early_team, s - 1)
    y = a.label(rec.late_team, s)
    assert (x, y) in ((1, 2), (2, 1))
    behind = a.label(rec.late_team, s - 2) if s >= 3 else 0
    across = a.label(rec.partner, s - 1)
    diag = a.label(rec.partner, s - 2) if s >= 3 else 0
    if x == 2:
        # mirror the labels so the analysis below sees the (1, 2) case
        behind, across, diag = ((0, 2, 1)[behind], (0, 2, 1)[across], (0, 2, 1)[diag])
    if behind != 0:
        pick = 3 - behind
    elif across != 0:
        pick = 3 - across
    elif diag != 0:
        pick = diag
    else:
        pick = 1
    if pick == 1:
        # move the early label across to the late team's row
        fixed = a.with_labels({(rec.early_team, s - 1): 0, (rec.late_team, s - 1): x})
    else:
        # pull the late label back one slot
        fixed = a.with_labels({(rec.late_team, s - 1): y, (rec.late_team, s): 0})
    assert octmap_is_valid(build_aux_graph(tt), fixed)
    assert fixed.zero_count == a.zero_count
    assert count_inconsistent(fixed, tt) < count_inconsistent(a, tt)
    return fixed


def repair(a: OCTMap, tt: Timetable) -> OCTMap:
    """Fix undecodable matches one at a time until none remain.

    The zero count never changes, so a minimum map stays minimum.
    """
    if not octmap_is_valid(build_aux_graph(tt), a):
        raise ValueError("label map is not valid for this timetable")
    budget = count_inconsistent(a, tt)
    steps = 0
    while True:
        rec = find_earliest_inconsistent(a, tt)
        if rec is None:
            return a
        assert steps < budget
        a = repair_step(a, rec, tt)
        steps += 1
