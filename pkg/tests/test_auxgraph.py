import pytest

from breakmin import (
    HORIZONTAL,
    MATCH,
    PREMATCH,
    AuxiliaryGraph,
    ValidationError,
    build_aux_graph,
    emit_dot,
    generate_circle,
    rectangular_cycles,
)
from breakmin.timetable import Timetable


def _edge_cells(g, kind):
    return {
        frozenset((g.vertex_ts(u), g.vertex_ts(v)))
        for u, v, k in g.edges
        if k == kind
    }


def test_small_graph_exact_edge_set(tt4):
    g = build_aux_graph(tt4)
    assert g.n_vertices == 8
    assert g.n_edges == 12
    assert _edge_cells(g, HORIZONTAL) == {
        frozenset(((1, 1), (1, 2))),
        frozenset(((2, 1), (2, 2))),
        frozenset(((3, 1), (3, 2))),
        frozenset(((4, 1), (4, 2))),
    }
    assert _edge_cells(g, MATCH) == {
        frozenset(((1, 1), (2, 1))),
        frozenset(((3, 1), (4, 1))),
        frozenset(((1, 2), (3, 2))),
        frozenset(((2, 2), (4, 2))),
    }
    assert _edge_cells(g, PREMATCH) == {
        frozenset(((1, 1), (3, 1))),
        frozenset(((2, 1), (4, 1))),
        frozenset(((1, 2), (4, 2))),
        frozenset(((2, 2), (3, 2))),
    }


def test_size_formulas_across_sizes():
    for n2 in (4, 6, 8, 10, 12, 14, 16):
        n = n2 // 2
        for seed in (None, 0, 3):
            g = build_aux_graph(generate_circle(n2, seed))
            assert g.n_vertices == n2 * (n2 - 2)
            kinds = [k for _, _, k in g.edges]
            assert kinds.count(HORIZONTAL) == n2 * (n2 - 3)
            assert kinds.count(MATCH) == n * (n2 - 2)
            assert kinds.count(PREMATCH) == n * (n2 - 2)


def test_degrees_peak_inside_and_dip_at_the_rim():
    for n2 in (4, 6, 8, 12):
        g = build_aux_graph(generate_circle(n2, seed=1))
        for v in range(g.n_vertices):
            _, s = g.vertex_ts(v)
            expected = 3 if s in (1, g.n_rslots) else 4
            assert g.degree(v) == expected


def test_match_and_prematch_families_never_coincide():
    for n2 in (4, 6, 8, 10):
        g = build_aux_graph(generate_circle(n2, seed=2))
        assert not (_edge_cells(g, MATCH) & _edge_cells(g, PREMATCH))


def test_vertex_id_roundtrip(tt8):
    g = build_aux_graph(tt8)
    for v in range(g.n_vertices):
        t, s = g.vertex_ts(v)
        assert 1 <= t <= 8 and 1 <= s <= 6
        assert g.vertex_id(t, s) == v


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        AuxiliaryGraph.from_edges(1, 2, [(0, 5, HORIZONTAL)])
    with pytest.raises(ValueError):
        AuxiliaryGraph.from_edges(1, 2, [(0, 0, HORIZONTAL)])
    with pytest.raises(ValueError):
        AuxiliaryGraph.from_edges(1, 3, [(0, 1, HORIZONTAL), (1, 0, MATCH)])


def test_build_rejects_invalid_timetable():
    bad = Timetable(((2, 3, 3), (1, 4, 4), (4, 1, 1), (3, 2, 2)))
    with pytest.raises(ValidationError):
        build_aux_graph(bad)


def test_rectangular_cycles_order_and_cells(tt4, tt8):
    cycles = rectangular_cycles(tt4)
    assert len(cycles) == 2  # n(2n-3)
    assert [(c.t1, c.t2, c.slot) for c in cycles] == [(1, 3, 2), (2, 4, 2)]
    assert cycles[0].cells == ((1, 1), (1, 2), (3, 2), (3, 1))
    cycles8 = rectangular_cycles(tt8)
    assert len(cycles8) == 4 * 5
    slots = [c.slot for c in cycles8]
    assert slots == sorted(slots)
    for c in cycles8:
        assert c.t1 < c.t2
        assert tt8.opp(c.t1, c.slot) == c.t2
        assert c.cells == (
            (c.t1, c.slot - 1),
            (c.t1, c.slot),
            (c.t2, c.slot),
            (c.t2, c.slot - 1),
        )


def test_emit_dot_shape_and_determinism(tt4):
    g = build_aux_graph(tt4)
    dot = emit_dot(g)
    assert dot == emit_dot(g)
    lines = dot.strip().splitlines()
    assert lines[0] == "graph auxiliary {"
    assert lines[-1] == "}"
    edge_lines = [ln for ln in lines if " -- " in ln]
    node_lines = [ln for ln in lines if ln.endswith('";')]
    assert len(edge_lines) == 12
    assert len(node_lines) == 8
    assert '  "1,1" -- "1,2" [kind=horizontal];' in lines
    for kind in (HORIZONTAL, MATCH, PREMATCH):
        assert sum(f"[kind={kind}]" in ln for ln in edge_lines) == 4
