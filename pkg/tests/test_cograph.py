from __future__ import annotations

import random

import pytest

from matchflip.blossom import max_matching
from matchflip.cograph import (
    Conditions,
    RootPartition,
    build_cotree,
    check_conditions,
    reachability_class,
    root_partition,
    solve_cograph,
    transform_cycle_free,
    transform_with_B_edge,
    transform_with_free_B_vertex,
)
from matchflip.errors import (
    ConditionViolatedError,
    CycleInDifferenceError,
    NotACographError,
)
from matchflip.generators import random_cotree_graph, random_matching_pair
from matchflip.graph import Graph, Slide, edge_set, verify_sequence
from matchflip.oracle import FLIP_SLIDE, enumerate_matchings, reachable

from helpers import (
    C4,
    C4_PM1,
    C4_PM2,
    K4,
    all_matchings_by_size,
    complete_graph,
    flip_component_ids,
    path_graph,
    petersen_graph,
    random_graph,
)


def test_cotree_c4():
    t = build_cotree(C4)
    assert t.kind == "join"
    sides = [t.left.leaves(), t.right.leaves()]
    assert sorted(map(sorted, sides)) == [[0, 2], [1, 3]]
    assert t.left.kind == "union" and t.right.kind == "union"


def test_cotree_p4_witness():
    with pytest.raises(NotACographError) as ei:
        build_cotree(path_graph(4))
    a, b, c, d = ei.value.witness
    g = path_graph(4)
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
    assert not g.has_edge(a, c) and not g.has_edge(a, d) and not g.has_edge(b, d)


def test_cotree_single_vertex():
    t = build_cotree(Graph(1, []))
    assert t.kind == "leaf" and t.vertex == 0


def test_cotree_json_roundtrippable():
    t = build_cotree(C4)
    j = t.to_json()
    assert isinstance(j, dict) and "join" in j


def test_witnesses_on_random_noncographs():
    rng = random.Random(8)
    found = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.2, 0.8))
        try:
            build_cotree(g)
        except NotACographError as exc:
            found += 1
            a, b, c, d = exc.witness
            assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
            assert not g.has_edge(a, c) and not g.has_edge(a, d) and not g.has_edge(b, d)
    assert found > 20


def test_max_matching_examples():
    assert len(max_matching(C4)) == 2
    assert len(max_matching(Graph(3, [(0, 1), (1, 2), (0, 2)]))) == 1
    assert len(max_matching(petersen_graph())) == 5
    # cross-check Petersen by exhaustive enumeration
    assert enumerate_matchings(petersen_graph(), "perfect")


def test_max_matching_random_brute_force():
    rng = random.Random(12)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.9))
        best = 0
        k = g.n // 2
        while k > 0:
            if enumerate_matchings(g, k, budget=500000):
                best = k
                break
            k -= 1
        mm = max_matching(g)
        assert len(mm) == best
        cov = set()
        for u, v in mm:
            assert g.has_edge(u, v) and u not in cov and v not in cov
            cov |= {u, v}


def test_check_conditions_examples():
    part = root_partition(C4)
    assert check_conditions(C4, part, 2) == Conditions(False, False)
    assert check_conditions(C4, part, 1).c2 is True
    part = RootPartition(frozenset({0, 1}), frozenset({2, 3}))
    assert check_conditions(K4, part, 2).c1 is True


def test_transform_cycle_free_examples():
    p3 = path_graph(3)
    seq = transform_cycle_free(p3, [(0, 1)], [(1, 2)])
    assert len(seq) == 1 and isinstance(seq.moves[0], Slide)
    assert verify_sequence(p3, edge_set([(0, 1)]), seq, edge_set([(1, 2)])).ok

    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    seq = transform_cycle_free(star, [(0, 1)], [(0, 2)])
    assert len(seq) == 1
    assert verify_sequence(star, edge_set([(0, 1)]), seq, edge_set([(0, 2)])).ok

    assert len(transform_cycle_free(C4, C4_PM1, C4_PM1)) == 0


def test_transform_cycle_free_rejects_cycles():
    with pytest.raises(CycleInDifferenceError):
        transform_cycle_free(C4, C4_PM1, C4_PM2)


def test_transform_cycle_free_random():
    rng = random.Random(77)
    done = 0
    for _ in range(400):
        g = random_cotree_graph(rng.randint(2, 9), rng)
        ms = all_matchings_by_size(g)
        sizes = [k for k in ms if k > 0]
        if not sizes:
            continue
        k = rng.choice(sizes)
        a, b = rng.choice(ms[k]), rng.choice(ms[k])
        from matchflip.graph import symmetric_difference_components

        if any(c.kind == "even_cycle" for c in symmetric_difference_components(a, b)):
            continue
        seq = transform_cycle_free(g, a, b)
        assert verify_sequence(g, a, seq, b).ok
        assert len(seq) <= 2 * len(a ^ b)
        done += 1
    assert done > 100


def test_transform_with_b_edge_k4():
    part = RootPartition(frozenset({0, 1}), frozenset({2, 3}))
    m1 = edge_set([(0, 1), (2, 3)])
    m2 = edge_set([(0, 2), (1, 3)])
    seq = transform_with_B_edge(K4, part, m1, m2)
    assert verify_sequence(K4, m1, seq, m2).ok
    assert len(transform_with_B_edge(K4, part, m1, m1)) == 0


def test_transform_with_b_edge_condition_checked():
    part = root_partition(C4)
    with pytest.raises(ConditionViolatedError):
        transform_with_B_edge(C4, part, C4_PM1, C4_PM2)


def test_transform_with_b_edge_join_of_2k2s():
    # join of 2K2 and 2K2: B-side has edges, C1 holds for perfect matchings
    edges = [(0, 1), (2, 3), (4, 5), (6, 7)]
    edges += [(a, b) for a in range(4) for b in range(4, 8)]
    g = Graph(8, edges)
    part = root_partition(g)
    assert check_conditions(g, part, 4).c1
    pms = enumerate_matchings(g, "perfect")
    comp = flip_component_ids(g, pms, slides=True)
    assert len(set(comp)) == 1
    rng = random.Random(3)
    for _ in range(15):
        a, b = rng.choice(pms), rng.choice(pms)
        seq = transform_with_B_edge(g, part, a, b)
        assert verify_sequence(g, a, seq, b).ok
        assert len(seq) <= 40 * g.n


def test_transform_with_free_b_vertex_examples():
    part = root_partition(C4)
    m1, m2 = edge_set([(0, 1)]), edge_set([(1, 2)])
    seq = transform_with_free_B_vertex(C4, part, m1, m2)
    assert verify_sequence(C4, m1, seq, m2).ok
    assert len(transform_with_free_B_vertex(C4, part, m1, m1)) == 0


def test_star_matchings_two_slides():
    # every size-1 matching of a star covers the hub, which sits alone on
    # side B, so neither condition holds and the solver recurses on the
    # leaf side; any pair still connects within two slides
    star = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    res = solve_cograph(star, [(0, 1)], [(0, 4)])
    assert res.yes and len(res.sequence) <= 2
    assert verify_sequence(star, edge_set([(0, 1)]), res.sequence, edge_set([(0, 4)])).ok


def test_transform_with_free_b_vertex_condition_checked():
    part = root_partition(C4)
    with pytest.raises(ConditionViolatedError):
        transform_with_free_B_vertex(C4, part, C4_PM1, C4_PM2)


def test_solve_2k2_no():
    g = Graph(4, [(0, 1), (2, 3)])
    res = solve_cograph(g, [(0, 1)], [(2, 3)])
    assert not res.yes


def test_solve_c4_one_flip():
    res = solve_cograph(C4, C4_PM1, C4_PM2)
    assert res.yes and len(res.sequence) == 1
    assert verify_sequence(C4, C4_PM1, res.sequence, C4_PM2).ok


def test_solve_size_mismatch_no():
    res = solve_cograph(C4, [(0, 1)], [])
    assert not res.yes


def test_solve_rejects_non_cograph():
    with pytest.raises(NotACographError):
        solve_cograph(path_graph(4), [(0, 1)], [(2, 3)])


def test_solve_five_vertex_cograph_full_sweep():
    # join(2K1, 2K1 + K2): all matching pairs against the oracle
    edges = [(3, 4)]
    edges += [(a, b) for a in (0, 1) for b in (2, 3, 4)]
    g = Graph(5, edges)
    by_size = all_matchings_by_size(g)
    for k, ms in by_size.items():
        comp = flip_component_ids(g, ms, slides=True)
        for i in range(len(ms)):
            for j in range(len(ms)):
                res = solve_cograph(g, ms[i], ms[j])
                assert res.yes == (comp[i] == comp[j])
                if res.yes:
                    assert verify_sequence(g, ms[i], res.sequence, ms[j]).ok


def test_perfect_inputs_emit_no_slides():
    rng = random.Random(21)
    checked = 0
    for _ in range(200):
        g = random_cotree_graph(rng.choice([4, 6, 8]), rng)
        pms = enumerate_matchings(g, "perfect")
        if len(pms) < 2:
            continue
        a, b = rng.sample(pms, 2)
        res = solve_cograph(g, a, b)
        if res.yes:
            assert all(not isinstance(mv, Slide) for mv in res.sequence.moves)
            checked += 1
    assert checked > 20


def test_lift_equivalence_when_conditions_fail():
    # whenever C1 and C2 both fail, reachability must equal reachability
    # of the induced matchings on side A
    rng = random.Random(31)
    seen = 0
    for _ in range(300):
        g = random_cotree_graph(rng.randint(2, 7), rng)
        from matchflip.graph import connected_components

        if len(connected_components(g)) != 1 or g.n < 2:
            continue
        part = root_partition(g)
        by_size = all_matchings_by_size(g)
        for k, ms in by_size.items():
            if k == 0:
                continue
            cond = check_conditions(g, part, k)
            if cond.c1 or cond.c2:
                continue
            seen += 1
            comp = flip_component_ids(g, ms, slides=True)
            cls = [reachability_class(g, m) for m in ms]
            groups = {}
            for i in range(len(ms)):
                groups.setdefault(cls[i], set()).add(comp[i])
            assert all(len(v) == 1 for v in groups.values())
    assert seen > 5


def test_solve_matches_oracle_random_cotrees():
    rng = random.Random(91)
    for _ in range(60):
        g = random_cotree_graph(rng.randint(2, 7), rng)
        a, b = random_matching_pair(g, rng)
        res = solve_cograph(g, a, b)
        orc = reachable(g, a, b, FLIP_SLIDE) if len(a) == len(b) else None
        if orc is None:
            assert not res.yes or a == b
            continue
        assert res.yes == orc.reachable
        if res.yes:
            assert verify_sequence(g, a, res.sequence, b).ok
            assert len(res.sequence) <= 40 * g.n


def test_complete_graph_matchings_connected():
    g = complete_graph(6)
    pms = enumerate_matchings(g, "perfect")
    rng = random.Random(1)
    for _ in range(10):
        a, b = rng.choice(pms), rng.choice(pms)
        res = solve_cograph(g, a, b)
        assert res.yes
        assert verify_sequence(g, a, res.sequence, b).ok
