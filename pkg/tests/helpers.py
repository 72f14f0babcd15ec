"""Shared fixtures: small graphs, random generators, brute-force oracles."""

from __future__ import annotations

import itertools
import random
from collections import deque

from matchflip.graph import Graph, edge, edge_set
from matchflip.oracle import MaskSpace


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


C4 = cycle_graph(4)
C6 = cycle_graph(6)
K4 = complete_graph(4)
C6_CHORD = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])

C4_PM1 = edge_set([(0, 1), (2, 3)])
C4_PM2 = edge_set([(1, 2), (3, 0)])
C6_PM1 = edge_set([(0, 1), (2, 3), (4, 5)])
C6_PM2 = edge_set([(1, 2), (3, 4), (5, 0)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_matching_of(g: Graph, rng: random.Random) -> frozenset:
    es = list(g.edges)
    rng.shuffle(es)
    used: set[int] = set()
    out = []
    for u, v in es:
        if u not in used and v not in used and rng.random() < 0.8:
            used.add(u)
            used.add(v)
            out.append(edge(u, v))
    return frozenset(out)


def flip_component_ids(g: Graph, matchings, slides: bool = False) -> list[int]:
    """Brute-force component labels over a fixed matching list."""
    from matchflip.oracle import FLIP_ONLY, FLIP_SLIDE, _neighbors_fast

    mode = FLIP_SLIDE if slides else FLIP_ONLY
    space = MaskSpace(g)
    masks = [space.to_mask(m) for m in matchings]
    ids = {m: i for i, m in enumerate(masks)}
    comp = [-1] * len(masks)
    cid = 0
    for i in range(len(masks)):
        if comp[i] >= 0:
            continue
        comp[i] = cid
        q = deque([i])
        while q:
            v = q.popleft()
            for nb in _neighbors_fast(space, masks[v], mode):
                j = ids.get(nb)
                if j is not None and comp[j] < 0:
                    comp[j] = cid
                    q.append(j)
        cid += 1
    return comp


def all_matchings_by_size(g: Graph, budget: int = 10**7):
    from matchflip.oracle import _all_matchings

    by_size: dict[int, list[frozenset]] = {}
    for m in _all_matchings(g, budget):
        by_size.setdefault(len(m), []).append(frozenset(m))
    return by_size


def connected_cographs(max_n: int):
    """All unlabeled connected cographs on 1..max_n vertices, via canonical
    alternating multiset trees (join of non-join pieces / union of
    non-union pieces)."""

    def partitions(n: int, minparts: int):
        def rec(n, mx):
            if n == 0:
                yield []
                return
            for first in range(min(n, mx), 0, -1):
                for rest in rec(n - first, first):
                    yield [first] + rest

        for p in rec(n, n):
            if len(p) >= minparts:
                yield p

    def pick(sizes, gen):
        groups: dict[int, int] = {}
        for s in sizes:
            groups[s] = groups.get(s, 0) + 1

        def rec(items):
            if not items:
                yield []
                return
            (sz, cnt), rest = items[0], items[1:]
            for combo in itertools.combinations_with_replacement(gen(sz), cnt):
                for tail in rec(rest):
                    yield list(combo) + tail

        yield from rec(sorted(groups.items()))

    memo_c: dict[int, list] = {}
    memo_nj: dict[int, list] = {}

    def conn(n: int):
        if n not in memo_c:
            if n == 1:
                memo_c[n] = [("v",)]
            else:
                out = []
                for parts in partitions(n, 2):
                    for combo in pick(parts, nonjoin):
                        out.append(("J",) + tuple(sorted(combo)))
                memo_c[n] = out
        return memo_c[n]

    def nonjoin(n: int):
        if n not in memo_nj:
            if n == 1:
                memo_nj[n] = [("v",)]
            else:
                out = []
                for parts in partitions(n, 2):
                    for combo in pick(parts, conn):
                        out.append(("U",) + tuple(sorted(combo)))
                memo_nj[n] = out
        return memo_nj[n]

    def materialize(tree):
        if tree[0] == "v":
            return 1, []
        n = 0
        groups = []
        edges = []
        for sub in tree[1:]:
            sn, se = materialize(sub)
            edges += [(u + n, v + n) for u, v in se]
            groups.append(range(n, n + sn))
            n += sn
        if tree[0] == "J":
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    edges += [(u, v) for u in groups[i] for v in groups[j]]
        return n, edges

    out = []
    for n in range(1, max_n + 1):
        for tree in conn(n):
            nn, ee = materialize(tree)
            out.append(Graph(nn, ee))
    return out


def random_outerplanar(rng: random.Random, n: int, p: float) -> Graph:
    """Cycle plus random non-crossing chords (triangulation thinned by p)."""
    edges = [(i, (i + 1) % n) for i in range(n)]

    def tri(a, b):
        if b - a < 2:
            return
        c = rng.randint(a + 1, b - 1)
        if c - a > 1 and rng.random() < p:
            edges.append((a, c))
        if b - c > 1 and rng.random() < p:
            edges.append((c, b))
        tri(a, c)
        tri(c, b)

    tri(0, n - 1)
    return Graph(n, set(edge(u, v) for u, v in edges))
