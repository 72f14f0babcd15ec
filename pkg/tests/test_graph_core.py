from __future__ import annotations

import random

import pytest

from matchflip.errors import (
    DuplicateEdgeError,
    EdgeNotInGraphError,
    InvalidFlipError,
    InvalidSlideError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from matchflip.graph import (
    Flip,
    Graph,
    MODE_FLIP,
    MODE_FLIP_SLIDE,
    ReconfigSequence,
    Slide,
    apply_move,
    canonical_flip,
    edge_set,
    four_cycles,
    matching_status,
    symmetric_difference_components,
    validate_graph,
    verify_sequence,
)
from matchflip.oracle import enumerate_matchings

from helpers import C4, C4_PM1, C4_PM2, C6, C6_PM1, C6_PM2, path_graph, random_graph


def test_validate_graph_c4():
    g = validate_graph(4, [[0, 1], [1, 2], [2, 3], [3, 0]])
    assert g.n == 4 and g.m == 4
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


def test_validate_graph_rejections():
    with pytest.raises(SelfLoopError):
        validate_graph(2, [[0, 0]])
    with pytest.raises(DuplicateEdgeError):
        validate_graph(3, [[0, 1], [1, 0]])
    with pytest.raises(VertexOutOfRangeError):
        validate_graph(2, [[0, 2]])


def test_matching_status():
    assert matching_status(C4, [(0, 1), (2, 3)]).kind == "perfect"
    assert matching_status(C4, [(0, 1), (1, 2)]).kind == "not_matching"
    st = matching_status(C4, [(0, 1)])
    assert st.kind == "matching" and st.size == 1
    with pytest.raises(EdgeNotInGraphError):
        matching_status(C4, [(0, 2)])


def test_apply_flip_c4():
    assert apply_move(C4, C4_PM1, Flip((0, 1, 2, 3))) == C4_PM2


def test_apply_slide_path():
    p3 = path_graph(3)
    assert apply_move(p3, edge_set([(0, 1)]), Slide((0, 1), (1, 2))) == edge_set([(1, 2)])


def test_flip_missing_edge_rejected():
    with pytest.raises(InvalidFlipError):
        apply_move(C6, C6_PM1, Flip((0, 1, 2, 3)))  # edge (3, 0) absent in C6


def test_slide_rejections():
    p3 = path_graph(3)
    with pytest.raises(InvalidSlideError):
        apply_move(p3, edge_set([(0, 1), (1, 2)]) - {(0, 1)}, Slide((0, 1), (1, 2)))
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(InvalidSlideError):
        # far endpoint already matched
        apply_move(g, edge_set([(0, 1), (2, 3)]), Slide((0, 1), (1, 2)))


def test_flip_involution_and_preservation_random():
    rng = random.Random(2024)
    for _ in range(250):
        g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.2, 0.8))
        matchings = enumerate_matchings(g, rng.randint(0, max(0, g.n // 2)), budget=200000)
        if not matchings:
            continue
        m = rng.choice(matchings)
        cycles = four_cycles(g)
        rng.shuffle(cycles)
        for cyc in cycles[:5]:
            fl = canonical_flip(cyc)
            try:
                m2 = apply_move(g, m, fl)
            except InvalidFlipError:
                continue
            assert len(m2) == len(m)
            assert matching_status(g, m2).kind != "not_matching"
            assert apply_move(g, m2, fl) == m  # involution
            diff = symmetric_difference_components(m, m2)
            assert len(diff) == 1 and diff[0].kind == "even_cycle"
            assert len(diff[0].vertices) == 4


def test_symmetric_difference_examples():
    comps = symmetric_difference_components(C4_PM1, C4_PM2)
    assert len(comps) == 1 and comps[0].kind == "even_cycle"
    assert sorted(comps[0].vertices) == [0, 1, 2, 3]
    assert symmetric_difference_components(C4_PM1, C4_PM1) == []
    comps = symmetric_difference_components(C6_PM1, C6_PM2)
    assert len(comps) == 1 and comps[0].kind == "even_cycle"
    assert len(comps[0].vertices) == 6


def test_symmetric_difference_structure_random():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 11), rng.uniform(0.2, 0.9))
        ms = enumerate_matchings(g, rng.randint(0, g.n // 2), budget=100000)
        if len(ms) < 2:
            continue
        m1, m2 = rng.sample(ms, 2)
        comps = symmetric_difference_components(m1, m2)
        assert sum(c.edge_count for c in comps) == len(m1 ^ m2)
        for c in comps:
            if c.kind == "even_cycle":
                assert len(c.vertices) % 2 == 0 and len(c.vertices) >= 4
            # edges alternate between the two matchings
            vs = c.vertices
            edges = [
                tuple(sorted((vs[i], vs[(i + 1) % len(vs)])))
                for i in range(len(vs) if c.kind == "even_cycle" else len(vs) - 1)
            ]
            sides = [e in m1 for e in edges]
            for a, b in zip(sides, sides[1:]):
                assert a != b


def test_flip_adjacency_iff_single_4cycle():
    rng = random.Random(99)
    for _ in range(120):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.9))
        pms = enumerate_matchings(g, "perfect")
        for i in range(len(pms)):
            for j in range(i + 1, len(pms)):
                comps = symmetric_difference_components(pms[i], pms[j])
                single4 = len(comps) == 1 and comps[0].kind == "even_cycle" and len(comps[0].vertices) == 4
                adjacent = False
                if comps and comps[0].kind == "even_cycle" and len(comps[0].vertices) == 4:
                    try:
                        adjacent = apply_move(g, pms[i], canonical_flip(comps[0].vertices)) == pms[j]
                    except InvalidFlipError:
                        adjacent = False
                assert single4 == adjacent


def test_verify_sequence_examples():
    seq = ReconfigSequence(MODE_FLIP, (Flip((0, 1, 2, 3)),))
    assert verify_sequence(C4, C4_PM1, seq, C4_PM2).ok

    empty = ReconfigSequence(MODE_FLIP, ())
    v = verify_sequence(C4, C4_PM1, empty, C4_PM2)
    assert not v.ok and v.step == 0 and v.reason == "final_mismatch"

    slide_seq = ReconfigSequence(MODE_FLIP, (Slide((0, 1), (1, 2)),))
    v = verify_sequence(C4, C4_PM1, slide_seq, C4_PM2)
    assert not v.ok and v.step == 0 and v.reason == "mode_violation"


def test_verify_sequence_replays():
    rng = random.Random(31)
    from matchflip.oracle import FLIP_SLIDE, reachable

    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 8), rng.uniform(0.3, 0.9))
        ms = enumerate_matchings(g, rng.randint(1, max(1, g.n // 2)), budget=50000)
        if len(ms) < 2:
            continue
        a, b = rng.sample(ms, 2)
        res = reachable(g, a, b, FLIP_SLIDE, want_path=True)
        if not res.reachable:
            continue
        assert verify_sequence(g, a, res.sequence, b).ok
        cur = a
        for mv in res.sequence.moves:
            cur = apply_move(g, cur, mv)
        assert cur == b


def test_kflip_mode_verification():
    seq = ReconfigSequence("kflip", (Flip((0, 1, 2, 3, 4, 5)),), k=6)
    assert verify_sequence(C6, C6_PM1, seq, C6_PM2).ok
    wrong = ReconfigSequence("kflip", (Flip((0, 1, 2, 3)),), k=6)
    v = verify_sequence(C6, C6_PM1, wrong, C6_PM2)
    assert not v.ok and v.reason == "mode_violation"


def test_empty_graph_identity():
    g = Graph(0, [])
    assert matching_status(g, []).kind == "perfect"
    assert verify_sequence(g, frozenset(), ReconfigSequence(MODE_FLIP_SLIDE, ()), frozenset()).ok


def test_empty_graph_through_all_solvers():
    from matchflip.cograph import solve_cograph
    from matchflip.outerplanar import solve_outerplanar
    from matchflip.strongly_orderable import solve_strongly_orderable

    g = Graph(0, [])
    empty = frozenset()
    assert solve_outerplanar(g, empty, empty).yes
    assert solve_cograph(g, empty, empty).yes
    assert len(solve_strongly_orderable(g, (), empty, empty)) == 0
