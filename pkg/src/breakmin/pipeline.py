"""End-to-end solving, reference brute force, and assignment verification.

`solve_bmp` chains the whole method: build the auxiliary graph, find an
odd cycle transversal, read the 2-coloring back as a label map, repair
it into a decodable one, decode, and complete.  With an exact solver
the break count of the result is the minimum possible for the
timetable; the heuristic gives an upper bound.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .auxgraph import build_aux_graph
from .repair import repair
from .timetable import (
    BreakReport,
    HAAssignment,
    Timetable,
    ValidationError,
    complete,
    count_breaks,
    is_consistent,
    validate,
)
from .transversal import (
    ha_to_octmap,
    heuristic_oct_upper_bound,
    min_oct_bruteforce,
    min_oct_exact,
    octmap_to_partial,
    transversal_to_octmap,
)

SOLVERS = ("exact", "brute", "heuristic")


class Bounds(NamedTuple):
    """`lower` holds for every timetable; `upper_nm4` only when the
    team count is not a multiple of 4, else None."""

    lower: int
    upper_nm4: Optional[int]


@dataclass(frozen=True)
class SolveReport:
    b_min: int
    oct_size: int
    assignment: HAAssignment
    breaks: BreakReport
    bounds: Bounds
    solver: str
    optimal: bool
    stats: dict

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "b_min": self.b_min,
            "oct_size": self.oct_size,
            "solver": self.solver,
            "optimal": self.optimal,
            "breaks": {
                "total": self.breaks.total,
                "positions": [list(p) for p in self.breaks.positions],
            },
            "bounds": {"lower": self.bounds.lower, "upper_nm4": self.bounds.upper_nm4},
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _bounds_for(n_teams: int) -> Bounds:
    n = n_teams // 2
    upper = (n - 1) ** 2 if n_teams % 4 != 0 else None
    return Bounds(lower=n_teams - 2, upper_nm4=upper)


def solve_bmp(tt: Timetable, solver: str = "exact", seed: int = 0) -> SolveReport:
    """Compute a consistent assignment for `tt` minimizing breaks.

    solver: "exact" (iterative compression), "brute" (subset search,
    tiny instances only) or "heuristic" (seeded, upper bound only).
    The report's b_min and oct_size always describe the assignment
    actually returned; `optimal` says whether that is proven minimum.
    """
    violations = validate(tt)
    if violations:
        raise ValidationError(violations)
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}, pick one of {SOLVERS}")
    t0 = time.perf_counter()
    g = build_aux_graph(tt)
    inner: dict = {}
    if solver == "exact":
        tv = min_oct_exact(g, inner)
    elif solver == "brute":
        tv = min_oct_bruteforce(g, inner)
    else:
        tv = heuristic_oct_upper_bound(g, seed, inner)
    a = transversal_to_octmap(g, tv)
    a = repair(a, tt)
    z = complete(octmap_to_partial(a, tt), tt)
    breaks = count_breaks(z)
    if solver in ("exact", "brute"):
        # the minimum transversal size is exactly the minimum break count
        assert breaks.total == len(tv)
    else:
        assert breaks.total <= len(tv)
    elapsed = time.perf_counter() - t0
    stats = dict(inner)
    stats["solver"] = solver
    stats["elapsed_s"] = round(elapsed, 6)
    stats["transversal_size"] = len(tv)
    if solver == "heuristic":
        stats["seed"] = seed
    return SolveReport(
        b_min=breaks.total,
        oct_size=ha_to_octmap(z).zero_count,
        assignment=z,
        breaks=breaks,
        bounds=_bounds_for(tt.n_teams),
        solver=solver,
        optimal=solver in ("exact", "brute"),
        stats=stats,
    )


def _slot_orientation_masks(tt: Timetable) -> list[list[int]]:
    # all home-team bitmasks a slot can take, one bit per team
    out = []
    for s in tt.slots():
        ms = tt.matches_at(s)
        masks = []
        for bits in range(1 << len(ms)):
            m = 0
            for i, (t1, t2) in enumerate(ms):
                home = t2 if (bits >> i) & 1 else t1
                m |= 1 << (home - 1)
            masks.append(m)
        out.append(masks)
    return out


def _min_breaks_enum(slot_masks: list[list[int]], n_teams: int) -> int:
    # literal exhaustive walk over every combination of slot orientations
    n_slots = len(slot_masks)
    best = n_teams * n_slots

    def go(i: int, prev: int, acc: int) -> None:
        nonlocal best
        if i == n_slots:
            if acc < best:
                best = acc
            return
        for m in slot_masks[i]:
            extra = n_teams - (prev ^ m).bit_count() if i > 0 else 0
            go(i + 1, m, acc + extra)

    go(0, 0, 0)
    return best


def _min_breaks_dp(slot_masks: list[list[int]], n_teams: int) -> int:
    # cheapest way to reach each venue vector, slot by slot
    cur = {m: 0 for m in slot_masks[0]}
    for masks in slot_masks[1:]:
        nxt = {}
        for m in masks:
            nxt[m] = min(c + n_teams - ((pm ^ m).bit_count()) for pm, c in cur.items())
        cur = nxt
    return min(cur.values())


def min_breaks_bruteforce(tt: Timetable, override: bool = False) -> int:
    """Minimum break count by trying match orientations directly.

    Independent of the graph machinery, so it can vouch for it.  The
    search space is 2 ** (n * (2n-1)); without `override` only sizes
    with at most 2**24 combinations are accepted (6 teams and below),
    with it a dynamic program handles 8 teams as well.
    """
    violations = validate(tt)
    if violations:
        raise ValidationError(violations)
    nbits = (tt.n_teams // 2) * tt.n_slots
    if nbits > 28:
        raise ValueError(f"{tt.n_teams} teams is out of reach for brute force")
    if nbits > 24 and not override:
        raise ValueError(
            f"{tt.n_teams} teams needs 2**{nbits} combinations; pass override=True"
        )
    slot_masks = _slot_orientation_masks(tt)
    if nbits <= 24:
        return _min_breaks_enum(slot_masks, tt.n_teams)
    return _min_breaks_dp(slot_masks, tt.n_teams)


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]
    breaks: Optional[BreakReport]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def verify(
    tt: Timetable, z: HAAssignment, claimed: Optional[int] = None
) -> VerificationReport:
    """Audit an assignment against its timetable.

    Checks shape, fullness, per-match consistency, the 2n-2 lower
    bound, and the claimed break count when one is given.  Failures are
    report entries, not exceptions.
    """
    violations = validate(tt)
    if violations:
        raise ValidationError(violations)
    checks: list[Check] = []
    if (z.n_teams, z.n_slots) != (tt.n_teams, tt.n_slots):
        checks.append(
            Check(
                "shape",
                False,
                f"assignment is {z.n_teams}x{z.n_slots}, "
                f"expected {tt.n_teams}x{tt.n_slots}",
            )
        )
        return VerificationReport(tuple(checks), None)
    checks.append(Check("shape", True, f"{z.n_teams}x{z.n_slots}"))

    full = z.is_full
    checks.append(Check("full", full, "no undecided cells" if full else "has * cells"))

    consistent = is_consistent(z, tt)
    if consistent:
        checks.append(Check("consistent", True, "every match has one home team"))
    else:
        bad = next(
            (s, t1, t2)
            for s in tt.slots()
            for t1, t2 in tt.matches_at(s)
            if z.cell(t1, s) != "*" and z.cell(t1, s) == z.cell(t2, s)
        )
        checks.append(
            Check(
                "consistent",
                False,
                f"teams {bad[1]} and {bad[2]} share a venue in slot {bad[0]}",
            )
        )

    breaks = None
    if full:
        breaks = count_breaks(z)
        lb = tt.n_teams - 2
        checks.append(
            Check(
                "lower-bound",
                breaks.total >= lb,
                f"{breaks.total} breaks vs lower bound {lb}",
            )
        )
        if claimed is not None:
            checks.append(
                Check(
                    "claimed",
                    breaks.total == claimed,
                    f"counted {breaks.total}, claimed {claimed}",
                )
            )
    elif claimed is not None:
        checks.append(Check("claimed", False, "cannot count breaks of a partial grid"))
    return VerificationReport(tuple(checks), breaks)
