"""Auxiliary graph linking break minimization to odd cycle transversals.

Vertices are (team, slot) cells over the reduced slot range 1..2n-2,
where cell (t, s) stands for the venue transition of team t between
slots s and s+1.  Three edge families:

  horizontal  same team, consecutive reduced slots
  match       the two teams that meet in slot s, both at reduced slot s
  prematch    the two teams that meet in slot s (s >= 2), both at s-1

Every labeling of the vertices that two-colors some induced subgraph
corresponds to a schedule, and deleted vertices correspond to breaks;
the solvers in `transversal` work on this graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .timetable import Timetable, ValidationError, validate

HORIZONTAL = "horizontal"
MATCH = "match"
PREMATCH = "prematch"


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Undirected graph on team/reduced-slot cells with tagged edges.

    Vertex ids are dense: (t, s) maps to (t-1)*n_rslots + (s-1).  Edges
    are stored once, smaller endpoint first, in construction order
    (horizontal, then match, then prematch).  `adj_masks[v]` is the
    neighborhood of v as a bitmask over vertex ids; the solvers lean on
    these masks heavily.
    """

    n_teams: int
    n_rslots: int
    edges: tuple[tuple[int, int, str], ...]
    adj: tuple[tuple[int, ...], ...]
    adj_masks: tuple[int, ...]

    @classmethod
    def from_edges(
        cls, n_teams: int, n_rslots: int, edges: list[tuple[int, int, str]]
    ) -> "AuxiliaryGraph":
        n = n_teams * n_rslots
        canon = []
        seen = set()
        for u, v, kind in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u},{v}) for {n} vertices")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a},{b})")
            seen.add((a, b))
            canon.append((a, b, kind))
        masks = [0] * n
        for a, b, _ in canon:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        adj = tuple(tuple(_bits(m)) for m in masks)
        return cls(n_teams, n_rslots, tuple(canon), adj, tuple(masks))

    @property
    def n_vertices(self) -> int:
        return self.n_teams * self.n_rslots

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex_id(self, team: int, slot: int) -> int:
        return (team - 1) * self.n_rslots + (slot - 1)

    def vertex_ts(self, v: int) -> tuple[int, int]:
        t, s = divmod(v, self.n_rslots)
        return (t + 1, s + 1)

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()


class RectangularCycle(NamedTuple):
    """The four cells around a match in slot `slot` (2 <= slot <= 2n-2).

    `cells` walks the cycle: (t1, slot-1), (t1, slot), (t2, slot),
    (t2, slot-1), with t1 < t2.
    """

    t1: int
    t2: int
    slot: int
    cells: tuple[tuple[int, int], ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_aux_graph(tt: Timetable) -> AuxiliaryGraph:
    """Build the auxiliary graph of a valid timetable.

    For 2n teams: 2n(2n-2) vertices, 2n(2n-3) horizontal edges and
    n(2n-2) edges in each of the match and prematch families.
    """
    violations = validate(tt)
    if violations:
        raise ValidationError(violations)
    n2 = tt.n_teams
    nr = tt.n_slots - 1  # reduced slots 1..2n-2
    def vid(t: int, s: int) -> int:
        return (t - 1) * nr + (s - 1)

    edges: list[tuple[int, int, str]] = []
    for t in tt.teams():
        for s in range(2, nr + 1):
            edges.append((vid(t, s - 1), vid(t, s), HORIZONTAL))
    for s in range(1, nr + 1):
        for t1, t2 in tt.matches_at(s):
            edges.append((vid(t1, s), vid(t2, s), MATCH))
    for s in range(2, tt.n_slots + 1):
        for t1, t2 in tt.matches_at(s):
            edges.append((vid(t1, s - 1), vid(t2, s - 1), PREMATCH))
    return AuxiliaryGraph.from_edges(n2, nr, edges)


def rectangular_cycles(tt: Timetable) -> list[RectangularCycle]:
    """All four-cycles spanned by matches in slots 2..2n-2.

    Ordered by slot, then by smaller team; n(2n-3) cycles for 2n teams.
    """
    out = []
    for s in range(2, tt.n_slots):
        for t1, t2 in tt.matches_at(s):
            cells = ((t1, s - 1), (t1, s), (t2, s), (t2, s - 1))
            out.append(RectangularCycle(t1, t2, s, cells))
    return out


def emit_dot(g: AuxiliaryGraph) -> str:
    """Render the graph in DOT, one node per cell, edge kind as an attribute.

    Output is deterministic: nodes by vertex id, edges in stored order.
    """
    lines = ["graph auxiliary {"]
    for v in range(g.n_vertices):
        t, s = g.vertex_ts(v)
        lines.append(f'  "{t},{s}";')
    for u, v, kind in g.edges:
        tu, su = g.vertex_ts(u)
        tv, sv = g.vertex_ts(v)
        lines.append(f'  "{tu},{su}" -- "{tv},{sv}" [kind={kind}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
