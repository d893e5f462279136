import random

import pytest

from breakmin import (
    OCTMap,
    build_aux_graph,
    complete,
    count_breaks,
    count_inconsistent,
    find_earliest_inconsistent,
    generate_circle,
    is_bipartite,
    is_consistent,
    is_consistent_on_cycle,
    is_locally_bipartite,
    octmap_is_valid,
    octmap_to_partial,
    rectangular_cycles,
    repair,
    repair_step,
    transversal_to_octmap,
)
from breakmin.transversal import Transversal


def test_consistent_fixture_has_no_inconsistency(tt4, tt4_map):
    assert find_earliest_inconsistent(tt4_map, tt4) is None
    assert count_inconsistent(tt4_map, tt4) == 0
    for c in rectangular_cycles(tt4):
        assert is_consistent_on_cycle(tt4_map, c)
        assert is_locally_bipartite(tt4_map, c)


def test_earliest_inconsistency_on_small_fixture(tt4, tt4_map_bad):
    rec = find_earliest_inconsistent(tt4_map_bad, tt4)
    assert rec is not None
    assert (rec.slot, rec.early_team, rec.late_team, rec.partner) == (2, 1, 3, 4)
    assert rec.pattern == ((2, 0), (0, 1))
    assert not is_consistent_on_cycle(tt4_map_bad, rec.cycle)
    # undecodable yet locally clean: the four labels break no edge
    assert is_locally_bipartite(tt4_map_bad, rec.cycle)


def test_earliest_inconsistency_on_large_fixture(tt8, tt8_map):
    rec = find_earliest_inconsistent(tt8_map, tt8)
    assert rec is not None
    assert (rec.slot, rec.early_team, rec.late_team, rec.partner) == (5, 3, 7, 4)
    assert rec.pattern == ((2, 0), (0, 1))


def test_repair_step_reproduces_fixture(tt8, tt8_map, tt8_map_repaired):
    rec = find_earliest_inconsistent(tt8_map, tt8)
    stepped = repair_step(tt8_map, rec, tt8)
    assert stepped == tt8_map_repaired
    assert stepped.zero_count == tt8_map.zero_count == 8
    assert find_earliest_inconsistent(stepped, tt8) is None


def test_repaired_fixture_decodes_consistently(tt8, tt8_map_repaired):
    partial = octmap_to_partial(tt8_map_repaired, tt8)
    assert is_consistent(partial, tt8)
    full = complete(partial, tt8)
    assert count_breaks(full).total == 8


def test_repair_small_fixture(tt4, tt4_map_bad):
    fixed = repair(tt4_map_bad, tt4)
    assert octmap_is_valid(build_aux_graph(tt4), fixed)
    assert fixed.zero_count == tt4_map_bad.zero_count == 5
    assert find_earliest_inconsistent(fixed, tt4) is None
    full = complete(octmap_to_partial(fixed, tt4), tt4)
    # completion may beat the zero count when the map was wasteful
    assert count_breaks(full).total <= fixed.zero_count


def test_repair_rejects_invalid_maps(tt4):
    all_ones = OCTMap(tuple((1, 1) for _ in range(4)))
    with pytest.raises(ValueError):
        repair(all_ones, tt4)


def _random_transversal_map(g, rng):
    # evict random vertices until bipartite, then color what is left
    removed = 0
    order = list(range(g.n_vertices))
    rng.shuffle(order)
    for v in order:
        if is_bipartite(g, removed):
            break
        removed |= 1 << v
    verts = tuple(v for v in range(g.n_vertices) if (removed >> v) & 1)
    return transversal_to_octmap(g, Transversal(verts))


def test_repair_random_maps_keep_their_zero_count():
    rng = random.Random(20)
    saw_inconsistent = 0
    for n2 in (4, 6):
        for seed in range(25):
            tt = generate_circle(n2, seed)
            g = build_aux_graph(tt)
            a = _random_transversal_map(g, rng)
            before = count_inconsistent(a, tt)
            saw_inconsistent += before > 0
            fixed = repair(a, tt)
            assert fixed.zero_count == a.zero_count
            assert octmap_is_valid(g, fixed)
            assert find_earliest_inconsistent(fixed, tt) is None
            partial = octmap_to_partial(fixed, tt)
            assert is_consistent(partial, tt)
            assert count_breaks(complete(partial, tt)).total <= fixed.zero_count
    assert saw_inconsistent > 0  # the suite must actually exercise repairs
