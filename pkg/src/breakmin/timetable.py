"""Single round-robin timetables and home/away assignments.

A timetable for an even number of teams 2n assigns every team one opponent
per slot, over 2n-1 slots, so that every pair of teams meets exactly once.
A home/away assignment marks each (team, slot) cell H or A; a break is a
team playing the same venue twice in a row.  Partial assignments use "*"
for undecided cells.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

HOME = "H"
AWAY = "A"
UNDECIDED = "*"

_HA_CELLS = frozenset((HOME, AWAY, UNDECIDED))


class Violation(NamedTuple):
    """One broken timetable rule, anchored to the cell where it shows."""

    rule: str
    team: int
    slot: int
    detail: str


class ValidationError(ValueError):
    """Raised when a timetable breaks the round-robin rules.

    Carries the full violation list so callers can report every problem,
    not just the first one.
    """

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        summary = "; ".join(
            f"{v.rule} at ({v.team},{v.slot}): {v.detail}" for v in self.violations
        )
        super().__init__(f"invalid timetable: {summary}")


@dataclass(frozen=True)
class Timetable:
    """Opponent matrix: rows[t-1][s-1] is the opponent of team t in slot s.

    Teams and slots are 1-indexed everywhere in the public API.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_teams(self) -> int:
        return len(self.rows)

    @property
    def n_slots(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def opp(self, team: int, slot: int) -> int:
        """Opponent of `team` in `slot`."""
        return self.rows[team - 1][slot - 1]

    def matches_at(self, slot: int) -> list[tuple[int, int]]:
        """Matches played in `slot`, each once, smaller team first."""
        return [
            (t, self.rows[t - 1][slot - 1])
            for t in range(1, self.n_teams + 1)
            if t < self.rows[t - 1][slot - 1]
        ]

    def teams(self) -> range:
        return range(1, self.n_teams + 1)

    def slots(self) -> range:
        return range(1, self.n_slots + 1)


@dataclass(frozen=True)
class HAAssignment:
    """Home/away grid; rows[t-1][s-1] is "H", "A" or "*" (undecided)."""

    rows: tuple[str, ...]

    @classmethod
    def from_grid(cls, grid: list[list[str]]) -> "HAAssignment":
        return cls(tuple("".join(row) for row in grid))

    @property
    def n_teams(self) -> int:
        return len(self.rows)

    @property
    def n_slots(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def cell(self, team: int, slot: int) -> str:
        return self.rows[team - 1][slot - 1]

    @property
    def is_full(self) -> bool:
        return not any(UNDECIDED in row for row in self.rows)


class BreakReport(NamedTuple):
    total: int
    positions: tuple[tuple[int, int], ...]


def validate(tt: Timetable) -> list[Violation]:
    """Check the round-robin rules; return all violations found.

    Rules, in report order:
      shape        even team count >= 4, exactly 2n-1 slot columns
      permutation  each row lists every other team exactly once
      involution   opp(opp(t,s), s) == t
      pair-once    every unordered pair meets in exactly one slot

    Shape problems suppress the cell-level checks, which would not be
    well defined on a ragged or mis-sized matrix.
    """
    out: list[Violation] = []
    n2 = tt.n_teams
    if n2 < 4 or n2 % 2 != 0:
        out.append(Violation("shape", 0, 0, f"need an even team count >= 4, got {n2}"))
    widths = {len(r) for r in tt.rows}
    if len(widths) > 1:
        out.append(Violation("shape", 0, 0, f"ragged rows, widths {sorted(widths)}"))
    elif tt.rows and tt.n_slots != n2 - 1:
        out.append(
            Violation("shape", 0, 0, f"expected {n2 - 1} slots, got {tt.n_slots}")
        )
    if out:
        return out

    for t in tt.teams():
        seen: set[int] = set()
        for s in tt.slots():
            o = tt.opp(t, s)
            if not 1 <= o <= n2:
                out.append(Violation("permutation", t, s, f"opponent {o} out of range"))
            elif o == t:
                out.append(Violation("permutation", t, s, "team paired with itself"))
            elif o in seen:
                out.append(Violation("permutation", t, s, f"opponent {o} repeated"))
            else:
                seen.add(o)

    for t in tt.teams():
        for s in tt.slots():
            o = tt.opp(t, s)
            if 1 <= o <= n2 and o != t and tt.opp(o, s) != t:
                v = Violation(
                    "involution", o, s, f"opp({o},{s})={tt.opp(o, s)}, expected {t}"
                )
                if v not in out:
                    out.append(v)

    meets: dict[tuple[int, int], list[int]] = {}
    for s in tt.slots():
        for t in tt.teams():
            o = tt.opp(t, s)
            if 1 <= o <= n2 and o != t and tt.opp(o, s) == t and t < o:
                meets.setdefault((t, o), []).append(s)
    for t1 in tt.teams():
        for t2 in range(t1 + 1, n2 + 1):
            slots = meets.get((t1, t2), [])
            if len(slots) == 0:
                v = Violation("pair-once", t1, 0, f"teams {t1} and {t2} never meet")
            elif len(slots) > 1:
                v = Violation(
                    "pair-once", t1, slots[1], f"teams {t1} and {t2} meet in slots {slots}"
                )
            else:
                continue
            if v not in out:
                out.append(v)
    return out


def _parse_grid(text: str, kind: str) -> list[list[str]]:
    # shared CSV shell for the three grid formats
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ValueError(f"empty {kind} file")
    header = rows[0]
    if not header or header[0].strip().lower() != "slot":
        raise ValueError(f"{kind} header must start with 'Slot', got {header[:1]!r}")
    want = [str(i) for i in range(1, len(header))]
    got = [c.strip() for c in header[1:]]
    if got != want:
        raise ValueError(f"{kind} header slots must be 1..{len(header) - 1}, got {got}")
    grid: list[list[str]] = []
    for i, row in enumerate(rows[1:], start=1):
        if row[0].strip() != str(i):
            raise ValueError(f"{kind} row {i} must be labeled {i}, got {row[0]!r}")
        if len(row) != len(header):
            raise ValueError(
                f"{kind} row {i} has {len(row) - 1} cells, expected {len(header) - 1}"
            )
        grid.append([c.strip() for c in row[1:]])
    return grid


def parse_timetable(text: str) -> Timetable:
    """Parse the CSV grid format and validate; raise ValueError on bad input."""
    grid = _parse_grid(text, "timetable")
    rows = []
    for i, row in enumerate(grid, start=1):
        try:
            rows.append(tuple(int(c) for c in row))
        except ValueError:
            raise ValueError(f"timetable row {i} has a non-integer cell: {row}") from None
    tt = Timetable(tuple(rows))
    violations = validate(tt)
    if violations:
        raise ValidationError(violations)
    return tt


def format_timetable(tt: Timetable) -> str:
    out = ["Slot," + ",".join(str(s) for s in tt.slots())]
    for t in tt.teams():
        out.append(f"{t}," + ",".join(str(o) for o in tt.rows[t - 1]))
    return "\n".join(out) + "\n"


def parse_ha(text: str) -> HAAssignment:
    """Parse a home/away CSV grid; cells must be H, A or *."""
    grid = _parse_grid(text, "assignment")
    for i, row in enumerate(grid, start=1):
        for j, c in enumerate(row, start=1):
            if c not in _HA_CELLS:
                raise ValueError(f"assignment cell ({i},{j}) must be H, A or *, got {c!r}")
    return HAAssignment.from_grid(grid)


def format_ha(z: HAAssignment) -> str:
    out = ["Slot," + ",".join(str(s) for s in range(1, z.n_slots + 1))]
    for t in range(1, z.n_teams + 1):
        out.append(f"{t}," + ",".join(z.rows[t - 1]))
    return "\n".join(out) + "\n"


def generate_circle(n_teams: int, seed: int | None = None) -> Timetable:
    """Construct a valid timetable for `n_teams` by the circle method.

    One team sits on the hub; the rest rotate around it.  With a seed,
    team labels and slot order are permuted pseudo-randomly, so the same
    seed always yields the same timetable.
    """
    if n_teams < 4 or n_teams % 2 != 0:
        raise ValueError(f"need an even team count >= 4, got {n_teams}")
    n_slots = n_teams - 1
    rows = [[0] * n_slots for _ in range(n_teams)]
    for r in range(n_slots):
        hub_rim = r  # rim index meeting the hub this round
        rows[n_teams - 1][r] = hub_rim + 1
        rows[hub_rim][r] = n_teams
        for x in range(n_slots):
            if x == hub_rim:
                continue
            y = (2 * r - x) % n_slots
            rows[x][r] = y + 1
    tt = Timetable(tuple(tuple(row) for row in rows))
    if seed is None:
        assert not validate(tt)
        return tt
    rng = random.Random(seed)
    team_map = list(range(1, n_teams + 1))
    rng.shuffle(team_map)  # team_map[t-1] is the new label of canonical team t
    slot_map = list(range(1, n_slots + 1))
    rng.shuffle(slot_map)
    new_rows = [[0] * n_slots for _ in range(n_teams)]
    for t in range(1, n_teams + 1):
        for s in range(1, n_slots + 1):
            new_rows[team_map[t - 1] - 1][slot_map[s - 1] - 1] = team_map[tt.opp(t, s) - 1]
    shuffled = Timetable(tuple(tuple(row) for row in new_rows))
    assert not validate(shuffled)
    return shuffled


def match_slot(tt: Timetable, t1: int, t2: int) -> int:
    """The unique slot where t1 and t2 meet."""
    if t1 == t2:
        raise ValueError("a team does not play itself")
    for s in tt.slots():
        if tt.opp(t1, s) == t2:
            return s
    raise ValueError(f"teams {t1} and {t2} never meet")


def count_breaks(z: HAAssignment) -> BreakReport:
    """Count breaks of a full assignment.

    Team t has a break at slot s (s >= 2) when it plays the same venue
    in slots s-1 and s.  Positions come out in (team, slot)
    lexicographic order.
    """
    if not z.is_full:
        raise ValueError("assignment has undecided cells; complete it first")
    positions = [
        (t, s)
        for t in range(1, z.n_teams + 1)
        for s in range(2, z.n_slots + 1)
        if z.cell(t, s - 1) == z.cell(t, s)
    ]
    return BreakReport(len(positions), tuple(positions))


def _conflicts(z: HAAssignment, tt: Timetable) -> Iterator[tuple[int, int, int]]:
    # yields (slot, t1, t2) for every decided match whose teams share a venue
    for s in tt.slots():
        for t1, t2 in tt.matches_at(s):
            c1, c2 = z.cell(t1, s), z.cell(t2, s)
            if UNDECIDED in (c1, c2):
                continue
            if c1 == c2:
                yield (s, t1, t2)


def is_consistent(z: HAAssignment, tt: Timetable) -> bool:
    """True when every decided match has one home and one away team.

    Undecided cells never count against consistency.
    """
    if (z.n_teams, z.n_slots) != (tt.n_teams, tt.n_slots):
        raise ValueError(
            f"assignment is {z.n_teams}x{z.n_slots}, timetable needs "
            f"{tt.n_teams}x{tt.n_slots}"
        )
    return next(_conflicts(z, tt), None) is None


def complete(z: HAAssignment, tt: Timetable) -> HAAssignment:
    """Fill every undecided cell of a consistent partial assignment.

    A cell whose opposite number is decided is forced.  When both sides
    of a match are undecided, the smaller-numbered team is sent home.
    The result is full and consistent.
    """
    if not is_consistent(z, tt):
        s, t1, t2 = next(_conflicts(z, tt))
        raise ValueError(
            f"inconsistent assignment: teams {t1} and {t2} share a venue in slot {s}"
        )
    grid = [list(row) for row in z.rows]
    for s in tt.slots():
        for t1, t2 in tt.matches_at(s):
            c1, c2 = grid[t1 - 1][s - 1], grid[t2 - 1][s - 1]
            if c1 == UNDECIDED and c2 == UNDECIDED:
                grid[t1 - 1][s - 1] = HOME
                grid[t2 - 1][s - 1] = AWAY
            elif c1 == UNDECIDED:
                grid[t1 - 1][s - 1] = HOME if c2 == AWAY else AWAY
            elif c2 == UNDECIDED:
                grid[t2 - 1][s - 1] = HOME if c1 == AWAY else AWAY
    done = HAAssignment.from_grid(grid)
    assert done.is_full and is_consistent(done, tt)
    return done
