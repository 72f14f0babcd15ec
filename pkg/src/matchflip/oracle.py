"""Brute-force ground truth: matching enumeration, reachability BFS, stats.

Matchings are encoded as bitmasks over a global edge index so BFS states
hash in O(1).  Flip neighbors come from a 4-cycle table precomputed once
per graph; k-flip neighbors are found by DFS over alternating cycles.
Everything here is desk-scale by design and guarded by an explicit budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Union

from .errors import BudgetExceededError, SizeMismatchError
from .graph import (
    Edge,
    Flip,
    Graph,
    MODE_FLIP,
    MODE_FLIP_SLIDE,
    MODE_KFLIP,
    Move,
    ReconfigSequence,
    Slide,
    canonical_flip,
    edge,
    four_cycles,
    matching_status,
)

DEFAULT_BUDGET = 2_000_000
KFLIP_MAX = 12


@dataclass(frozen=True)
class Mode:
    """Adjacency relation for the reconfiguration graph."""

    kind: Literal["flip", "flip_slide", "kflip"]
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP):
            raise ValueError(f"unknown mode kind {self.kind!r}")
        if self.kind == MODE_KFLIP:
            if self.k is None or self.k % 2 != 0 or self.k < 4:
                raise ValueError(f"kflip needs even k >= 4, got {self.k}")
            if self.k > KFLIP_MAX:
                raise ValueError(f"k capped at {KFLIP_MAX} for the oracle")
        elif self.k is not None:
            raise ValueError("k only applies to kflip mode")

    @property
    def sequence_mode(self) -> str:
        return self.kind


FLIP_ONLY = Mode(MODE_FLIP)
FLIP_SLIDE = Mode(MODE_FLIP_SLIDE)


def kflip(k: int) -> Mode:
    return Mode(MODE_KFLIP, k)


@dataclass(frozen=True)
class ReconfigGraphStats:
    nodes: int
    components: int
    component_sizes: tuple[int, ...]  # descending
    diameter: Optional[int]


@dataclass(frozen=True)
class ReachResult:
    reachable: bool
    distance: Optional[int] = None
    sequence: Optional[ReconfigSequence] = None


# ---------------------------------------------------------------------------
# enumeration


def enumerate_matchings(
    g: Graph,
    target: Union[int, Literal["perfect"]],
    budget: int = DEFAULT_BUDGET,
) -> list[frozenset[Edge]]:
    """Exhaustively list matchings, in lexicographic sorted-edge order.

    ``target`` is ``"perfect"`` or an exact size.  Raises
    :class:`BudgetExceededError` when more than ``budget`` matchings exist.
    """
    if target == "perfect":
        out = [frozenset(m) for m in _perfect_matchings(g, budget)]
    else:
        k = int(target)
        out = []
        for m in _all_matchings(g, budget):
            if len(m) == k:
                out.append(frozenset(m))
                if len(out) > budget:
                    raise BudgetExceededError("too many matchings")
    out.sort(key=lambda m: sorted(m))
    return out


def _perfect_matchings(g: Graph, budget: int) -> Iterable[tuple[Edge, ...]]:
    if g.n % 2 != 0:
        return
    found = 0
    cur: list[Edge] = []
    covered = [False] * g.n

    def rec(lo: int):
        nonlocal found
        v = lo
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            found += 1
            if found > budget:
                raise BudgetExceededError("too many perfect matchings")
            yield tuple(cur)
            return
        covered[v] = True
        for w in sorted(g.adj[v]):
            if not covered[w]:
                covered[w] = True
                cur.append(edge(v, w))
                yield from rec(v + 1)
                cur.pop()
                covered[w] = False
        covered[v] = False

    yield from rec(0)


def _all_matchings(g: Graph, budget: int) -> Iterable[tuple[Edge, ...]]:
    edges = g.sorted_edges()
    found = 0
    cur: list[Edge] = []
    covered = [False] * max(g.n, 1)

    def rec(i: int):
        nonlocal found
        found += 1
        if found > budget:
            raise BudgetExceededError("too many matchings")
        yield tuple(cur)
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not covered[u] and not covered[v]:
                covered[u] = covered[v] = True
                cur.append(edges[j])
                yield from rec(j + 1)
                cur.pop()
                covered[u] = covered[v] = False

    yield from rec(0)


# ---------------------------------------------------------------------------
# mask-level machinery (shared with the hardness module's k-factor checks)


class MaskSpace:
    """Bitmask encoding of edge subsets of a fixed graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.edges = g.sorted_edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        cycles = four_cycles(g)
        self.cycles = cycles
        self.cycle_masks: list[tuple[int, int, int]] = []
        for a, b, c, d in cycles:
            e1 = 1 << self.index[edge(a, b)]
            e2 = 1 << self.index[edge(b, c)]
            e3 = 1 << self.index[edge(c, d)]
            e4 = 1 << self.index[edge(d, a)]
            self.cycle_masks.append((e1 | e3, e2 | e4, e1 | e2 | e3 | e4))

    def to_mask(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.index[edge(*e)]
        return m

    def to_edges(self, mask: int) -> frozenset[Edge]:
        return frozenset(e for i, e in enumerate(self.edges) if mask >> i & 1)

    def flip_neighbor_masks(self, mask: int) -> list[int]:
        """Masks one alternating-4-cycle exchange away (valid for any edge
        subset whose degrees the exchange should preserve)."""
        out = []
        for even, odd, both in self.cycle_masks:
            inter = mask & both
            if inter == even or inter == odd:
                out.append(mask ^ both)
        return out


def _slide_neighbor_masks(space: MaskSpace, mask: int) -> list[tuple[int, Slide]]:
    g = space.g
    matched = [space.edges[i] for i in range(len(space.edges)) if mask >> i & 1]
    covered = set()
    for u, v in matched:
        covered.add(u)
        covered.add(v)
    out = []
    for u, v in matched:
        bit = 1 << space.index[(u, v)]
        for pivot, other in ((u, v), (v, u)):
            for w in g.adj[pivot]:
                if w not in covered and w != other:
                    nb = (mask ^ bit) | (1 << space.index[edge(pivot, w)])
                    out.append((nb, Slide((pivot, other), (pivot, w))))
    return out


def _kflip_neighbor_masks(space: MaskSpace, mask: int, k: int) -> list[tuple[int, Flip]]:
    """Alternating cycles of length exactly k, each found once by starting
    at its minimum vertex along that vertex's matched edge."""
    g = space.g
    partner: dict[int, int] = {}
    for i, e in enumerate(space.edges):
        if mask >> i & 1:
            partner[e[0]] = e[1]
            partner[e[1]] = e[0]
    out = []
    for u0 in sorted(partner):
        v1 = partner[u0]
        if v1 < u0:
            continue
        path = [u0, v1]
        used = {u0, v1}

        def rec(cur: int, steps: int):
            # after an odd number of steps: next edge must be unmatched
            if steps == k - 1:
                if u0 in g.adj[cur] and partner.get(cur) != u0:
                    cyc = tuple(path)
                    cmask = 0
                    ok = True
                    for i in range(k):
                        a, b = cyc[i], cyc[(i + 1) % k]
                        if b not in g.adj[a]:
                            ok = False
                            break
                        cmask |= 1 << space.index[edge(a, b)]
                    if ok:
                        out.append((mask ^ cmask, canonical_flip(cyc)))
                return
            if steps % 2 == 1:
                for w in g.adj[cur]:
                    if w > u0 and w not in used and partner.get(cur) != w and w in partner:
                        path.append(w)
                        used.add(w)
                        rec(w, steps + 1)
                        path.pop()
                        used.discard(w)
            else:
                w = partner.get(cur)
                if w is not None and w > u0 and w not in used:
                    path.append(w)
                    used.add(w)
                    rec(w, steps + 1)
                    path.pop()
                    used.discard(w)

        rec(v1, 1)
    # deduplicate (a cycle can be scanned once only, but stay safe)
    seen = set()
    uniq = []
    for nb, fl in out:
        if fl.cycle not in seen:
            seen.add(fl.cycle)
            uniq.append((nb, fl))
    return uniq


def _neighbors(space: MaskSpace, mask: int, mode: Mode) -> list[tuple[int, Move]]:
    res: list[tuple[int, Move]] = []
    if mode.kind in (MODE_FLIP, MODE_FLIP_SLIDE):
        for idx, (even, odd, both) in enumerate(space.cycle_masks):
            inter = mask & both
            if inter == even or inter == odd:
                res.append((mask ^ both, canonical_flip(space.cycles[idx])))
        if mode.kind == MODE_FLIP_SLIDE:
            res.extend(_slide_neighbor_masks(space, mask))
    else:
        res.extend(_kflip_neighbor_masks(space, mask, mode.k or 4))
    return res


def _neighbors_fast(space: MaskSpace, mask: int, mode: Mode) -> list[int]:
    if mode.kind in (MODE_FLIP, MODE_FLIP_SLIDE):
        res = space.flip_neighbor_masks(mask)
        if mode.kind == MODE_FLIP_SLIDE:
            res.extend(nb for nb, _ in _slide_neighbor_masks(space, mask))
        return res
    return [nb for nb, _ in _kflip_neighbor_masks(space, mask, mode.k or 4)]


# ---------------------------------------------------------------------------
# reachability and statistics


def reachable(
    g: Graph,
    m1: frozenset[Edge],
    m2: frozenset[Edge],
    mode: Mode = FLIP_ONLY,
    want_path: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> ReachResult:
    """BFS over the mode-induced adjacency between matchings.

    Returns a shortest sequence when ``want_path``; raises
    :class:`SizeMismatchError` on unequal sizes and
    :class:`BudgetExceededError` when the explored state space exceeds
    ``budget``.
    """
    for m in (m1, m2):
        st = matching_status(g, m)
        if st.kind == "not_matching":
            raise SizeMismatchError("input is not a matching")
    if len(m1) != len(m2):
        raise SizeMismatchError(f"matching sizes differ: {len(m1)} vs {len(m2)}")
    space = MaskSpace(g)
    start, goal = space.to_mask(m1), space.to_mask(m2)
    if start == goal:
        return ReachResult(True, 0, _empty_sequence(mode) if want_path else None)
    dist = {start: 0}
    parent: dict[int, tuple[int, Move]] = {}
    q = deque([start])
    while q:
        cur = q.popleft()
        for nb, mv in _neighbors(space, cur, mode):
            if nb in dist:
                continue
            dist[nb] = dist[cur] + 1
            parent[nb] = (cur, mv)
            if nb == goal:
                seq = None
                if want_path:
                    moves: list[Move] = []
                    node = goal
                    while node != start:
                        node, mv2 = parent[node]
                        moves.append(mv2)
                    moves.reverse()
                    seq = ReconfigSequence(mode.sequence_mode, tuple(moves), mode.k)
                return ReachResult(True, dist[goal], seq)
            q.append(nb)
            if len(dist) > budget:
                raise BudgetExceededError("reachability state space exceeds budget")
    return ReachResult(False)


def _empty_sequence(mode: Mode) -> ReconfigSequence:
    return ReconfigSequence(mode.sequence_mode, (), mode.k)


def reconfiguration_stats(
    g: Graph,
    target: Union[int, Literal["perfect"]],
    mode: Mode = FLIP_ONLY,
    source: Optional[frozenset[Edge]] = None,
    budget: int = DEFAULT_BUDGET,
) -> ReconfigGraphStats:
    """Exact statistics of the reconfiguration graph over all matchings of
    the target class.  Diameter is taken over the component containing
    ``source`` when given, otherwise the maximum over all components."""
    nodes = enumerate_matchings(g, target, budget)
    space = MaskSpace(g)
    masks = [space.to_mask(m) for m in nodes]
    ids = {m: i for i, m in enumerate(masks)}
    adj: list[list[int]] = [[] for _ in masks]
    work = 0
    for i, m in enumerate(masks):
        for nb in _neighbors_fast(space, m, mode):
            j = ids.get(nb)
            if j is not None and j != i:
                adj[i].append(j)
        work += 1 + len(adj[i])
        if work > budget:
            raise BudgetExceededError("stats adjacency exceeds budget")
    comp = [-1] * len(masks)
    comp_lists: list[list[int]] = []
    for i in range(len(masks)):
        if comp[i] >= 0:
            continue
        cid = len(comp_lists)
        comp[i] = cid
        members = [i]
        q = deque([i])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if comp[w] < 0:
                    comp[w] = cid
                    members.append(w)
                    q.append(w)
        comp_lists.append(members)
    sizes = tuple(sorted((len(c) for c in comp_lists), reverse=True))

    def comp_diameter(members: list[int]) -> int:
        best = 0
        mem = set(members)
        for s in members:
            d = {s: 0}
            q = deque([s])
            while q:
                v = q.popleft()
                for w in adj[v]:
                    if w in mem and w not in d:
                        d[w] = d[v] + 1
                        q.append(w)
            best = max(best, max(d.values()))
        return best

    diameter: Optional[int]
    if source is not None:
        smask = space.to_mask(source)
        if smask not in ids:
            raise SizeMismatchError("source matching not in the target class")
        diameter = comp_diameter(comp_lists[comp[ids[smask]]])
    elif comp_lists:
        diameter = max(comp_diameter(c) for c in comp_lists)
    else:
        diameter = None
    return ReconfigGraphStats(len(nodes), len(comp_lists), sizes, diameter)
