"""Odd cycle transversals of the auxiliary graph, and label-map translations.

A label map puts 0, 1 or 2 on every (team, reduced slot) cell.  Cells
labeled 1 and cells labeled 2 must each form an independent set of the
auxiliary graph; the 0 cells then hit every odd cycle, so they are an
odd cycle transversal.  Label 1 reads "home then away" across the two
slots the cell spans, label 2 the reverse, and 0 marks a venue repeat
(a break) or an undecided transition.

Three solvers return vertex sets whose deletion leaves the graph
bipartite: an exhaustive one for tiny graphs, an exact one built on
iterative compression, and a randomized eviction heuristic.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass

from .auxgraph import AuxiliaryGraph
from .timetable import AWAY, HOME, UNDECIDED, HAAssignment, Timetable, _parse_grid

_INF = 1 << 30


@dataclass(frozen=True)
class OCTMap:
    """Label grid; rows[t-1][s-1] in {0, 1, 2} over reduced slots."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_teams(self) -> int:
        return len(self.rows)

    @property
    def n_rslots(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def label(self, team: int, slot: int) -> int:
        return self.rows[team - 1][slot - 1]

    def zero_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (t, s)
            for t in range(1, self.n_teams + 1)
            for s in range(1, self.n_rslots + 1)
            if self.rows[t - 1][s - 1] == 0
        )

    @property
    def zero_count(self) -> int:
        return sum(row.count(0) for row in self.rows)

    def with_labels(self, changes: dict[tuple[int, int], int]) -> "OCTMap":
        """Copy with the given (team, slot) cells relabeled."""
        grid = [list(r) for r in self.rows]
        for (t, s), val in changes.items():
            grid[t - 1][s - 1] = val
        return OCTMap(tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class Transversal:
    """A vertex set, as sorted vertex ids of one auxiliary graph."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def cells(self, g: AuxiliaryGraph) -> tuple[tuple[int, int], ...]:
        return tuple(g.vertex_ts(v) for v in self.vertices)


def parse_octmap(text: str) -> OCTMap:
    grid = _parse_grid(text, "label map")
    rows = []
    for i, row in enumerate(grid, start=1):
        vals = []
        for j, c in enumerate(row, start=1):
            if c not in ("0", "1", "2"):
                raise ValueError(f"label map cell ({i},{j}) must be 0, 1 or 2, got {c!r}")
            vals.append(int(c))
        rows.append(tuple(vals))
    return OCTMap(tuple(rows))


def format_octmap(a: OCTMap) -> str:
    out = ["Slot," + ",".join(str(s) for s in range(1, a.n_rslots + 1))]
    for t in range(1, a.n_teams + 1):
        out.append(f"{t}," + ",".join(str(v) for v in a.rows[t - 1]))
    return "\n".join(out) + "\n"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _two_color(adj: tuple[int, ...], active: int) -> tuple[int, int] | None:
    """2-color the subgraph induced by `active`, or None on an odd cycle.

    Components are visited from their smallest vertex, which lands on
    side 1, so the coloring is canonical for a given active set.
    """
    side1 = side2 = 0
    rest = active
    while rest:
        frontier = rest & -rest
        comp = frontier
        parity = 0
        while frontier:
            if parity == 0:
                side1 |= frontier
            else:
                side2 |= frontier
            nxt = 0
            fm = frontier
            while fm:
                low = fm & -fm
                u = low.bit_length() - 1
                fm ^= low
                au = adj[u] & active
                if au & frontier:
                    return None
                nxt |= au
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
            parity ^= 1
        rest &= ~comp
    return side1, side2


def is_bipartite(g: AuxiliaryGraph, removed: int = 0) -> bool:
    """True when the graph minus the `removed` vertex mask has no odd cycle."""
    full = (1 << g.n_vertices) - 1
    return _two_color(g.adj_masks, full & ~removed) is not None


def octmap_is_valid(g: AuxiliaryGraph, a: OCTMap) -> bool:
    """True when both nonzero label classes are independent sets of g."""
    if (a.n_teams, a.n_rslots) != (g.n_teams, g.n_rslots):
        raise ValueError(
            f"label map is {a.n_teams}x{a.n_rslots}, graph needs "
            f"{g.n_teams}x{g.n_rslots}"
        )
    m1 = m2 = 0
    for t in range(1, a.n_teams + 1):
        for s in range(1, a.n_rslots + 1):
            lab = a.rows[t - 1][s - 1]
            if lab == 1:
                m1 |= 1 << g.vertex_id(t, s)
            elif lab == 2:
                m2 |= 1 << g.vertex_id(t, s)
            elif lab != 0:
                return False
    for u in _bits(m1):
        if g.adj_masks[u] & m1:
            return False
    for u in _bits(m2):
        if g.adj_masks[u] & m2:
            return False
    return True


def transversal_to_octmap(g: AuxiliaryGraph, tv: Transversal) -> OCTMap:
    """Label the graph minus `tv` by 2-coloring; removed cells get 0.

    Each component of the remaining graph is colored breadth-first from
    its smallest vertex, which takes label 1.
    """
    full = (1 << g.n_vertices) - 1
    sides = _two_color(g.adj_masks, full & ~tv.mask())
    if sides is None:
        raise ValueError("vertex set is not an odd cycle transversal")
    side1, _ = sides
    removed = tv.mask()
    rows = []
    for t in range(1, g.n_teams + 1):
        row = []
        for s in range(1, g.n_rslots + 1):
            v = g.vertex_id(t, s)
            if (removed >> v) & 1:
                row.append(0)
            elif (side1 >> v) & 1:
                row.append(1)
            else:
                row.append(2)
        rows.append(tuple(row))
    return OCTMap(tuple(rows))


def ha_to_octmap(z: HAAssignment) -> OCTMap:
    """Read each team's venue transitions off an assignment.

    (H, A) across slots s, s+1 gives label 1, (A, H) gives 2, anything
    else (a repeat or an undecided side) gives 0.  Partial assignments
    are fine.
    """
    rows = []
    for t in range(1, z.n_teams + 1):
        row = []
        for s in range(1, z.n_slots):
            pair = (z.cell(t, s), z.cell(t, s + 1))
            if pair == (HOME, AWAY):
                row.append(1)
            elif pair == (AWAY, HOME):
                row.append(2)
            else:
                row.append(0)
        rows.append(tuple(row))
    return OCTMap(tuple(rows))


def octmap_to_partial(a: OCTMap, tt: Timetable) -> HAAssignment:
    """Decode a label map into the partial assignment it determines.

    Cell (t, s) is H when a 1 starts there or a 2 ends there, A in the
    mirrored cases, and * when no adjacent label decides it.
    """
    if (a.n_teams, a.n_rslots) != (tt.n_teams, tt.n_slots - 1):
        raise ValueError(
            f"label map is {a.n_teams}x{a.n_rslots}, timetable needs "
            f"{tt.n_teams}x{tt.n_slots - 1}"
        )
    grid = []
    for t in tt.teams():
        row = []
        for s in tt.slots():
            here = a.label(t, s) if s <= a.n_rslots else 0
            prev = a.label(t, s - 1) if s >= 2 else 0
            wants_home = here == 1 or prev == 2
            wants_away = here == 2 or prev == 1
            if wants_home and wants_away:
                raise ValueError(
                    f"labels around ({t},{s}) clash; the map is not valid"
                )
            row.append(HOME if wants_home else AWAY if wants_away else UNDECIDED)
        grid.append(row)
    return HAAssignment.from_grid(grid)


def min_oct_bruteforce(g: AuxiliaryGraph, stats: dict | None = None) -> Transversal:
    """Smallest odd cycle transversal by subset enumeration.

    Deterministic: among minimum transversals it returns the
    lexicographically smallest vertex tuple.  Refuses graphs with more
    than 32 vertices.
    """
    n = g.n_vertices
    if n > 32:
        raise ValueError(f"graph has {n} vertices; exhaustive search is capped at 32")
    adj = g.adj_masks
    full = (1 << n) - 1
    checked = 0
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            checked += 1
            dele = 0
            for v in combo:
                dele |= 1 << v
            if _two_color(adj, full & ~dele) is not None:
                if stats is not None:
                    stats["subsets"] = checked
                    stats["nodes"] = checked
                return Transversal(tuple(combo))
    raise AssertionError("unreachable: the full vertex set is always a transversal")


def _compress(
    adj: tuple[int, ...], prefix_mask: int, x_list: list[int], k_target: int
) -> tuple[list[int] | None, int]:
    """Search the prefix graph for a transversal of size <= k_target.

    x_list is a transversal of the prefix of size k_target + 1.  Every
    3-way split of it is tried: deleted vertices, kept on side 1, kept
    on side 2.  Keeping a split consistent with some 2-coloring of the
    rest reduces to a minimum vertex cut, computed by augmenting paths
    on the vertex-split network.  Returns (solution or None, number of
    splits that reached the cut phase).
    """
    x_mask = 0
    for v in x_list:
        x_mask |= 1 << v
    h_mask = prefix_mask & ~x_mask
    sides = _two_color(adj, h_mask)
    assert sides is not None  # x_list is a transversal of the prefix
    side1, side2 = sides
    h_verts = list(_bits(h_mask))
    nh = len(h_verts)
    pos = {hv: i for i, hv in enumerate(h_verts)}

    # flow network: in(i) = 2i, out(i) = 2i+1, unit capacity across each
    # vertex, edges of H and terminal hookups effectively uncapped
    nn = 2 * nh + 2
    src = 2 * nh
    snk = 2 * nh + 1
    head = [-1] * nn
    eto: list[int] = []
    ecap: list[int] = []
    enxt: list[int] = []

    def add(u: int, v: int, c: int) -> None:
        eto.append(v); ecap.append(c); enxt.append(head[u]); head[u] = len(eto) - 1
        eto.append(u); ecap.append(0); enxt.append(head[v]); head[v] = len(eto) - 1

    for i in range(nh):
        add(2 * i, 2 * i + 1, 1)
    for i, hv in enumerate(h_verts):
        m = adj[hv] & h_mask
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if w > hv:
                j = pos[w]
                add(2 * i + 1, 2 * j, _INF)
                add(2 * j + 1, 2 * i, _INF)
    base_m = len(eto)
    base_head = head.copy()
    base_cap = ecap.copy()

    hnb = [adj[v] & h_mask for v in x_list]
    k = len(x_list)
    leaves = 0

    def try_split(d_list: list[int], w1: int, w2: int) -> list[int] | None:
        nonlocal leaves
        limit = k_target - len(d_list)
        req2 = 0  # H cells adjacent to side-1 keeps must take color 2
        req1 = 0
        for i, v in enumerate(x_list):
            if (w1 >> v) & 1:
                req2 |= hnb[i]
            elif (w2 >> v) & 1:
                req1 |= hnb[i]
        keep = (req1 & side1) | (req2 & side2)
        flip = (req1 & side2) | (req2 & side1)
        if (keep & flip).bit_count() > limit:
            return None
        leaves += 1
        del eto[base_m:], ecap[base_m:], enxt[base_m:]
        ecap[:] = base_cap
        head[:] = base_head
        for u in _bits(keep):
            add(src, 2 * pos[u], _INF)
        for u in _bits(flip):
            add(2 * pos[u] + 1, snk, _INF)
        flow = 0
        while flow <= limit:
            # breadth-first hunt for one augmenting path
            par = [-1] * nn
            par[src] = -2
            q = deque([src])
            found = False
            while q and not found:
                u = q.popleft()
                e = head[u]
                while e != -1:
                    v2 = eto[e]
                    if par[v2] == -1 and ecap[e] > 0:
                        par[v2] = e
                        if v2 == snk:
                            found = True
                            break
                        q.append(v2)
                    e = enxt[e]
            if not found:
                break
            v2 = snk
            while v2 != src:
                e = par[v2]
                ecap[e] -= 1
                ecap[e ^ 1] += 1
                v2 = eto[e ^ 1]
            flow += 1
        if flow > limit:
            return None
        # residual reachability gives the source side of a minimum cut
        reach = [False] * nn
        reach[src] = True
        q = deque([src])
        while q:
            u = q.popleft()
            e = head[u]
            while e != -1:
                v2 = eto[e]
                if not reach[v2] and ecap[e] > 0:
                    reach[v2] = True
                    q.append(v2)
                e = enxt[e]
        cut = [h_verts[i] for i in range(nh) if reach[2 * i] and not reach[2 * i + 1]]
        assert len(cut) == flow
        return sorted(d_list + cut)

    def walk(i: int, d_list: list[int], w1: int, w2: int, sided: bool) -> list[int] | None:
        if len(d_list) > k_target:
            return None
        if i == k:
            return try_split(d_list, w1, w2)
        v = x_list[i]
        got = walk(i + 1, d_list + [v], w1, w2, sided)
        if got is not None:
            return got
        av = adj[v]
        if not (av & w1):
            got = walk(i + 1, d_list, w1 | (1 << v), w2, True)
            if got is not None:
                return got
        # the first vertex kept out of D goes to side 1; mirrored splits
        # are equivalent
        if sided and not (av & w2):
            got = walk(i + 1, d_list, w1, w2 | (1 << v), True)
            if got is not None:
                return got
        return None

    return walk(0, [], 0, 0, False), leaves


def min_oct_exact(g: AuxiliaryGraph, stats: dict | None = None) -> Transversal:
    """Minimum odd cycle transversal by iterative compression.

    Vertices enter in id order.  The working set stays a minimum
    transversal of the processed prefix: after each forced insertion a
    compression round either shrinks the set back by one or proves it
    minimum.  Deterministic, no randomness anywhere.
    """
    adj = g.adj_masks
    n = g.n_vertices
    x: list[int] = []
    x_mask = 0
    compressions = 0
    leaves = 0
    for v in range(n):
        prefix = (1 << (v + 1)) - 1
        if _two_color(adj, prefix & ~x_mask) is not None:
            continue
        x.append(v)
        x_mask |= 1 << v
        compressions += 1
        better, cnt = _compress(adj, prefix, x, len(x) - 1)
        leaves += cnt
        if better is not None:
            assert len(better) == len(x) - 1
            x = better
            x_mask = 0
            for u in x:
                x_mask |= 1 << u
    if stats is not None:
        stats["compressions"] = compressions
        stats["cut_phases"] = leaves
        stats["nodes"] = leaves
    return Transversal(tuple(x))


def _forced_coloring(
    adj: tuple[int, ...], active: int, rng: random.Random
) -> tuple[int, int]:
    # breadth-first layering from a random start per component; on a
    # non-bipartite component some edges simply end up monochromatic
    side1 = side2 = 0
    rest = active
    while rest:
        options = list(_bits(rest))
        start = options[0] if len(options) == 1 else rng.choice(options)
        frontier = 1 << start
        comp = frontier
        parity = 0
        while frontier:
            if parity == 0:
                side1 |= frontier
            else:
                side2 |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            nxt &= active & ~comp
            comp |= nxt
            frontier = nxt
            parity ^= 1
        rest &= ~comp
    return side1, side2


def heuristic_oct_upper_bound(
    g: AuxiliaryGraph, seed: int = 0, stats: dict | None = None
) -> Transversal:
    """Fast transversal, not necessarily minimum.

    Repeatedly 2-colors what is left (breadth-first, random starts) and
    evicts a vertex carrying the most monochromatic edges, until the
    rest is bipartite.  A cleanup pass puts back any eviction the
    remaining graph turns out not to need.  Deterministic for a given
    seed, and returns the empty set on bipartite input.
    """
    rng = random.Random(seed)
    adj = g.adj_masks
    n = g.n_vertices
    full = (1 << n) - 1 if n else 0
    ev_mask = 0
    evicted: list[int] = []
    evictions = 0
    while True:
        active = full & ~ev_mask
        side1, side2 = _forced_coloring(adj, active, rng)
        worst = 0
        worst_verts: list[int] = []
        for u in _bits(active):
            same = side1 if (side1 >> u) & 1 else side2
            cnt = (adj[u] & active & same).bit_count()
            if cnt > worst:
                worst = cnt
                worst_verts = [u]
            elif cnt == worst and worst > 0:
                worst_verts.append(u)
        if worst == 0:
            break
        pick = worst_verts[0] if len(worst_verts) == 1 else rng.choice(worst_verts)
        evicted.append(pick)
        ev_mask |= 1 << pick
        evictions += 1
    restored = 0
    improved = True
    while improved:
        improved = False
        for v in sorted(evicted):
            trial = ev_mask & ~(1 << v)
            if _two_color(adj, full & ~trial) is not None:
                ev_mask = trial
                evicted.remove(v)
                restored += 1
                improved = True
    if stats is not None:
        stats["evictions"] = evictions
        stats["restored"] = restored
        stats["nodes"] = evictions
    assert _two_color(adj, full & ~ev_mask) is not None
    return Transversal(tuple(sorted(evicted)))
