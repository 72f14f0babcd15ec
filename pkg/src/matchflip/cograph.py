"""Matching reconfiguration (flips + slides) on cographs.

Cographs are the P4-free graphs; a connected one is the complete join of
the two sides of its cotree's root split.  The solver classifies each
connected piece by two conditions on the smaller side B of that split:

* C1 -- some size-k matching keeps an edge inside B;
* C2 -- some size-k matching leaves a B-vertex unmatched.

Under either condition every two size-k matchings are connected by a
short sequence routed through an explicitly constructed anchor matching
(``transform_with_B_edge`` / ``transform_with_free_B_vertex``).  When
both fail, every size-k matching covers B entirely, B is matched into A,
and reachability reduces to the matchings induced on A, with A-side
moves lifted back by turning blocked slides into flips and repairing the
A-B assignment with at most 2|B| extra moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .blossom import max_matching
from .errors import (
    ConditionViolatedError,
    CycleInDifferenceError,
    NotACographError,
    SizeMismatchError,
)
from .graph import (
    Edge,
    Flip,
    Graph,
    MODE_FLIP_SLIDE,
    Move,
    ReconfigSequence,
    Slide,
    canonical_flip,
    connected_components,
    edge,
    induced_subgraph,
    invert_move,
    matching_status,
    partner_map,
    symmetric_difference_components,
)

_CLAIM_CAP_FACTOR = 10


# ---------------------------------------------------------------------------
# cotree


@dataclass(frozen=True)
class CotreeNode:
    kind: str  # "leaf" | "union" | "join"
    vertex: Optional[int] = None
    left: Optional["CotreeNode"] = None
    right: Optional["CotreeNode"] = None

    def leaves(self) -> frozenset[int]:
        if self.kind == "leaf":
            return frozenset((self.vertex,))
        return self.left.leaves() | self.right.leaves()

    def to_json(self):
        if self.kind == "leaf":
            return self.vertex
        return {self.kind: [self.left.to_json(), self.right.to_json()]}


@dataclass(frozen=True)
class RootPartition:
    a: frozenset[int]
    b: frozenset[int]


def _co_components(g: Graph, vertices: set[int]) -> list[list[int]]:
    """Connected components of the complement, within ``vertices``."""
    left = set(vertices)
    comps = []
    while left:
        start = min(left)
        left.discard(start)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            grab = left - g.adj[v]
            left -= grab
            comp |= grab
            frontier.extend(grab)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _find_p4(g: Graph, vertices: set[int]) -> tuple[int, int, int, int]:
    for v in sorted(vertices):
        for w in sorted(g.adj[v] & vertices):
            if w < v:
                continue
            left = (g.adj[v] & vertices) - g.adj[w] - {w}
            right = (g.adj[w] & vertices) - g.adj[v] - {v}
            for u in sorted(left):
                for x in sorted(right):
                    if u != x and x not in g.adj[u]:
                        return (u, v, w, x)
    raise RuntimeError("internal: expected an induced P4")


def _fold(kind: str, trees: list[CotreeNode]) -> CotreeNode:
    node = trees[0]
    for t in trees[1:]:
        node = CotreeNode(kind, None, node, t)
    return node


def build_cotree(g: Graph) -> CotreeNode:
    """Cotree of ``g`` (single vertices at leaves, binary union/join nodes
    above).  Raises :class:`NotACographError` with an induced-P4 witness."""
    if g.n == 0:
        raise ValueError("cotree of the empty graph is undefined")

    def rec(vertices: set[int]) -> CotreeNode:
        if len(vertices) == 1:
            return CotreeNode("leaf", next(iter(vertices)))
        comps = connected_components(g, vertices)
        if len(comps) > 1:
            return _fold("union", [rec(set(c)) for c in comps])
        cocomps = _co_components(g, vertices)
        if len(cocomps) > 1:
            return _fold("join", [rec(set(c)) for c in cocomps])
        raise NotACographError(_find_p4(g, vertices))

    return rec(set(range(g.n)))


def is_cograph(g: Graph) -> bool:
    try:
        if g.n:
            build_cotree(g)
        return True
    except NotACographError:
        return False


def root_partition(g: Graph, cotree: Optional[CotreeNode] = None) -> RootPartition:
    """The two completely joined sides under a connected cograph's root
    join node, larger side first."""
    tree = cotree if cotree is not None else build_cotree(g)
    if tree.kind != "join":
        raise ValueError("root partition needs a connected cograph on >= 2 vertices")
    a, b = tree.left.leaves(), tree.right.leaves()
    if len(a) < len(b):
        a, b = b, a
    return RootPartition(a, b)


# ---------------------------------------------------------------------------
# conditions


@dataclass(frozen=True)
class Conditions:
    c1: bool
    c2: bool


def _nu_without(g: Graph, removed: set[int]) -> int:
    keep = [v for v in range(g.n) if v not in removed]
    sub, _ = induced_subgraph(g, keep)
    return len(max_matching(sub))


def check_conditions(g: Graph, part: RootPartition, k: int) -> Conditions:
    """C1: some size-k matching has an edge inside B (try every B-edge,
    delete its endpoints, ask for k-1 more).  C2: some size-k matching
    misses a B-vertex (delete the vertex, ask for k)."""
    b = part.b
    c1 = False
    if k >= 1:
        for (u, v) in sorted(g.edges):
            if u in b and v in b and _nu_without(g, {u, v}) >= k - 1:
                c1 = True
                break
    c2 = any(_nu_without(g, {v}) >= k for v in sorted(b))
    return Conditions(c1, c2)


# ---------------------------------------------------------------------------
# a mutable matching that records the moves applied to it


class _Side:
    def __init__(self, g: Graph, start):
        self.g = g
        self.m: set[Edge] = set(edge(*e) for e in start)
        self.partner = partner_map(self.m)
        self.moves: list[Move] = []

    def flip(self, cycle: Sequence[int]) -> None:
        mv = canonical_flip(tuple(cycle))
        cyc = mv.cycle_edges()
        inside = [e for e in cyc if e in self.m]
        if len(inside) != len(cyc) // 2:
            raise RuntimeError(f"internal: flip {cycle} not alternating")
        for e in cyc:
            if e[1] not in self.g.adj[e[0]]:
                raise RuntimeError(f"internal: flip edge {e} missing from graph")
        for e in inside:
            self.m.discard(e)
            del self.partner[e[0]], self.partner[e[1]]
        for e in cyc:
            if e not in inside:
                self.m.add(e)
                self.partner[e[0]], self.partner[e[1]] = e[1], e[0]
        self.moves.append(mv)

    def slide(self, removed: Edge, added: Edge) -> None:
        mv = Slide(removed, added)
        rem, add = mv.removed, mv.added
        far = add[0] if add[1] == mv.pivot else add[1]
        if rem not in self.m or far in self.partner or add[1] not in self.g.adj[add[0]]:
            raise RuntimeError(f"internal: bad slide {rem} -> {add}")
        self.m.discard(rem)
        del self.partner[rem[0]], self.partner[rem[1]]
        self.m.add(add)
        self.partner[add[0]], self.partner[add[1]] = add[1], add[0]
        self.moves.append(mv)


def _cancel_common_tail(fwd: list[Move], bwd: list[Move]) -> None:
    """Equal final moves into the same meeting state come from the same
    pre-state (moves are invertible), so matching tails cancel."""
    while fwd and bwd and fwd[-1] == bwd[-1]:
        fwd.pop()
        bwd.pop()


def _glue(g: Graph, fwd: _Side, bwd: _Side) -> list[Move]:
    """Moves from fwd's start to bwd's start, meeting in the middle."""
    if fwd.m != bwd.m:
        raise RuntimeError("internal: sides did not meet")
    f, b = list(fwd.moves), list(bwd.moves)
    _cancel_common_tail(f, b)
    return f + [invert_move(mv) for mv in reversed(b)]


# ---------------------------------------------------------------------------
# cycle-free transformation (difference contains no cycle)


def transform_cycle_free(
    g: Graph, m1, m2
) -> ReconfigSequence:
    """Flip+slide sequence of length <= 2|M1 (triangle) M2| when the
    difference is acyclic.  Paths retract from their endpoints; leftover
    lone-edge pairs travel via an adjacent edge or a distance-2 midpoint."""
    m1 = frozenset(edge(*e) for e in m1)
    m2 = frozenset(edge(*e) for e in m2)
    if len(m1) != len(m2):
        raise SizeMismatchError("matchings must have equal size")
    if any(c.kind == "even_cycle" for c in symmetric_difference_components(m1, m2)):
        raise CycleInDifferenceError("difference contains a cycle")
    s1, s2 = _Side(g, m1), _Side(g, m2)
    _make_equal_cycle_free(g, s1, s2)
    return ReconfigSequence(MODE_FLIP_SLIDE, tuple(_glue(g, s1, s2)))


def _make_equal_cycle_free(g: Graph, s1: _Side, s2: _Side) -> None:
    comp_id = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_id[v] = i
    while s1.m != s2.m:
        comps = symmetric_difference_components(frozenset(s1.m), frozenset(s2.m))
        paths = [c for c in comps if c.kind == "alternating_path"]
        if paths:
            vs = paths[0].vertices
            first = edge(vs[0], vs[1])
            second = edge(vs[1], vs[2])
            # the path's end vertex is unmatched on the side missing its
            # end edge, so that side absorbs it with one slide
            if first in s1.m:
                s2.slide(second, first)
            else:
                s1.slide(second, first)
            continue
        singles = [c for c in comps if c.kind == "single_edge"]
        e1 = next(edge(*c.vertices) for c in singles if edge(*c.vertices) in s1.m)
        e2 = next(
            edge(*c.vertices)
            for c in singles
            if edge(*c.vertices) in s2.m and comp_id[c.vertices[0]] == comp_id[e1[0]]
        )
        _resolve_single_pair(g, s1, e1, e2)


def _resolve_single_pair(g: Graph, s1: _Side, e1: Edge, e2: Edge) -> None:
    # both endpoints of e2 are unmatched in s1's matching
    endpoint_pairs = [(p, q) for p in e1 for q in e2]
    for p, q in endpoint_pairs:
        if q in g.adj[p]:
            s1.slide(e1, edge(p, q))
            s1.slide(edge(p, q), e2)
            return
    for p, q in endpoint_pairs:
        common = (g.adj[p] & g.adj[q]) - set(e1) - set(e2)
        if not common:
            continue
        w = min(common)
        if w not in s1.partner:
            s1.slide(e1, edge(p, w))
            s1.slide(edge(p, w), edge(w, q))
            s1.slide(edge(w, q), e2)
        else:
            wp = s1.partner[w]
            s1.slide(edge(w, wp), edge(w, q))
            s1.slide(edge(w, q), e2)
            s1.slide(e1, edge(p, w))
            s1.slide(edge(p, w), edge(w, wp))
        return
    raise RuntimeError("internal: lone difference edges further than distance 2")


# ---------------------------------------------------------------------------
# anchored transformation when C1 holds


def _anchor_with_b_edge(g: Graph, part: RootPartition, k: int):
    b = part.b
    for (u, v) in sorted(g.edges):
        if u in b and v in b and _nu_without(g, {u, v}) >= k - 1:
            keep = [x for x in range(g.n) if x not in (u, v)]
            sub, vmap = induced_subgraph(g, keep)
            rest = sorted(edge(vmap[x], vmap[y]) for (x, y) in max_matching(sub))[: k - 1]
            return edge(u, v), set(rest)
    return None


def _normalize_anchor(g: Graph, part: RootPartition, e: Edge, m: set[Edge]) -> set[Edge]:
    """Rewrite the anchor so e is its only edge inside B (pure editing;
    the anchor is ours to choose)."""
    a_side, b_side = part.a, part.b
    while True:
        extra = sorted(
            f for f in m if f != e and f[0] in b_side and f[1] in b_side
        )
        if not extra:
            return m
        x, y = extra[0]
        a_edges = sorted(f for f in m if f[0] in a_side and f[1] in a_side)
        covered = partner_map(m)
        free_a = sorted(v for v in a_side if v not in covered)
        if a_edges:
            c, d = a_edges[0]
            m.discard((x, y))
            m.discard((c, d))
            m.add(edge(x, c))
            m.add(edge(y, d))
        elif free_a:
            m.discard((x, y))
            m.add(edge(x, free_a[0]))
        else:
            raise RuntimeError("internal: cannot normalize anchor")


def _enforce_claim_assumptions(
    g: Graph, part: RootPartition, e: Edge, sm: _Side, si: _Side
) -> None:
    """Local fixes until the difference with the anchor has no B-edge on
    the non-anchor side, no cycle inside A, and none of the three short
    forbidden patterns.  Each fix is the constructive step from the
    anchored-transformation argument; the loop is capped defensively."""
    a_side, b_side = part.a, part.b
    xe, ye = e
    cap = _CLAIM_CAP_FACTOR * (len(sm.m ^ si.m) + 2) + 20
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            raise RuntimeError("internal: assumption enforcement did not converge")
        diff = sm.m ^ si.m
        if _fix_b_edge_in_other(g, part, si):
            continue
        if _fix_a_cycle(g, part, e, sm, si, diff):
            continue
        if _fix_short_pattern(g, part, sm, si, diff):
            continue
        if _fix_w_pattern(g, part, e, sm, si, diff):
            continue
        return


def _diff_neighbors(diff: frozenset[Edge]) -> dict[int, list[int]]:
    nbr: dict[int, list[int]] = {}
    for u, v in diff:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    return nbr


def _fix_b_edge_in_other(g: Graph, part: RootPartition, si: _Side) -> bool:
    a_side, b_side = part.a, part.b
    bad = sorted(f for f in si.m if f[0] in b_side and f[1] in b_side)
    if not bad:
        return False
    x, y = bad[0]
    a_edges = sorted(f for f in si.m if f[0] in a_side and f[1] in a_side)
    free_a = sorted(v for v in a_side if v not in si.partner)
    if a_edges:
        c, d = a_edges[0]
        si.flip((x, c, d, y))  # removes {xy, cd}, adds {xc, dy}
    elif free_a:
        si.slide((x, y), (x, free_a[0]))
    else:
        raise RuntimeError("internal: B-edge with no A-edge and no free A-vertex")
    return True


def _fix_a_cycle(g, part, e, sm: _Side, si: _Side, diff) -> bool:
    a_side = part.a
    xe, ye = e
    for comp in symmetric_difference_components(frozenset(sm.m), frozenset(si.m)):
        if comp.kind != "even_cycle" or not all(v in a_side for v in comp.vertices):
            continue
        cyc = list(comp.vertices)
        if edge(cyc[-1], cyc[0]) not in sm.m:
            cyc = cyc[1:] + cyc[:1]
        if edge(cyc[-1], cyc[0]) not in sm.m:
            raise RuntimeError("internal: cycle does not alternate")
        # rotate the anchor's B-edge around the cycle, restoring it at the end
        sm.flip((xe, ye, cyc[-1], cyc[0]))
        for i in range(1, len(cyc) // 2):
            sm.flip((xe, cyc[2 * i - 2], cyc[2 * i - 1], cyc[2 * i]))
        sm.flip((xe, cyc[-2], cyc[-1], ye))
        return True
    return False


def _fix_short_pattern(g, part, sm: _Side, si: _Side, diff) -> bool:
    """Patterns (3) and (4): three consecutive difference edges that a
    single flip across the join collapses."""
    a_side, b_side = part.a, part.b
    nbr = _diff_neighbors(diff)

    def side(v):
        return "A" if v in a_side else "B"

    for mid in sorted(diff):
        v, w = mid
        for vv, ww in ((v, w), (w, v)):
            us = [u for u in nbr.get(vv, []) if u != ww]
            xs = [x for x in nbr.get(ww, []) if x != vv]
            if not us or not xs:
                continue
            u, x = us[0], xs[0]
            if u == x:
                continue
            pat3 = side(u) == "B" and side(vv) == "A" and side(ww) == "A" and side(x) == "A"
            pat4 = (
                side(u) != side(vv) and side(vv) != side(ww) and side(ww) != side(x)
            )
            if not (pat3 or pat4):
                continue
            owner = sm if edge(u, vv) in sm.m else si
            if edge(ww, x) not in owner.m:
                continue
            owner.flip((u, vv, ww, x))
            return True
    return False


def _fix_w_pattern(g, part, e, sm: _Side, si: _Side, diff) -> bool:
    a_side, b_side = part.a, part.b
    xe, ye = e
    nbr = _diff_neighbors(diff)

    def step(frm, hop):
        nxt = [t for t in nbr.get(hop, []) if t != frm]
        return nxt[0] if nxt else None

    for u, v in sorted(diff):
        for uu, vv in ((u, v), (v, u)):
            if uu not in b_side or vv not in a_side or edge(uu, vv) not in sm.m:
                continue
            w = step(uu, vv)
            if w is None or w not in a_side:
                continue
            x = step(vv, w)
            if x is None or x not in b_side or edge(w, x) not in sm.m:
                continue
            y = step(w, x)
            if y is None or y not in a_side:
                continue
            z = step(x, y)
            if z is None or z not in a_side or edge(y, z) not in sm.m:
                continue
            if {xe, ye} & {uu, vv, w, x, y, z}:
                raise RuntimeError("internal: anchor edge inside W-pattern")
            sm.flip((xe, y, z, ye))
            sm.flip((x, y, xe, w))
            sm.flip((ye, z, uu, vv))
            sm.flip((xe, w, vv, ye))
            return True
    return False


def _route_to_b_edge_anchor(
    g: Graph, part: RootPartition, e: Edge, anchor: frozenset[Edge], m: frozenset[Edge]
) -> list[Move]:
    sm = _Side(g, anchor)
    si = _Side(g, m)
    _enforce_claim_assumptions(g, part, e, sm, si)
    cycles = [
        c
        for c in symmetric_difference_components(frozenset(sm.m), frozenset(si.m))
        if c.kind == "even_cycle"
    ]
    if cycles:
        if len(cycles) != 1 or len(cycles[0].vertices) != 4 or not (
            {e[0], e[1]} <= set(cycles[0].vertices)
        ):
            raise RuntimeError("internal: unexpected cycle structure after fixes")
        sm.flip(cycles[0].vertices)
    _make_equal_cycle_free(g, si, sm)
    return _glue(g, si, sm)


def transform_with_B_edge(
    g: Graph, part: RootPartition, m1, m2
) -> ReconfigSequence:
    """Sequence between two equal-size matchings when condition C1 holds,
    routed through an anchor whose only B-edge is fixed."""
    m1 = frozenset(edge(*x) for x in m1)
    m2 = frozenset(edge(*x) for x in m2)
    if len(m1) != len(m2):
        raise SizeMismatchError("matchings must have equal size")
    k = len(m1)
    found = _anchor_with_b_edge(g, part, k)
    if found is None:
        raise ConditionViolatedError("condition C1 does not hold")
    e, rest = found
    anchor = frozenset(_normalize_anchor(g, part, e, {e} | rest))
    fwd = _route_to_b_edge_anchor(g, part, e, anchor, m1)
    bwd = _route_to_b_edge_anchor(g, part, e, anchor, m2)
    _cancel_common_tail(fwd, bwd)
    moves = fwd + [invert_move(mv) for mv in reversed(bwd)]
    return ReconfigSequence(MODE_FLIP_SLIDE, tuple(moves))


# ---------------------------------------------------------------------------
# anchored transformation when C2 holds (and C1 fails)


def transform_with_free_B_vertex(
    g: Graph, part: RootPartition, m1, m2
) -> ReconfigSequence:
    """Sequence between two equal-size matchings when C2 holds and C1
    fails: difference cycles unwind by sliding through a B-vertex the
    anchor leaves unmatched."""
    m1 = frozenset(edge(*x) for x in m1)
    m2 = frozenset(edge(*x) for x in m2)
    if len(m1) != len(m2):
        raise SizeMismatchError("matchings must have equal size")
    k = len(m1)
    cond = check_conditions(g, part, k)
    if cond.c1 or not cond.c2:
        raise ConditionViolatedError("needs C2 and not C1")
    b_side = part.b
    # with C1 false no size-k matching uses a B-edge, so B-edges are inert
    work_edges = [f for f in g.edges if not (f[0] in b_side and f[1] in b_side)]
    work = Graph(g.n, work_edges)
    v_free = None
    for v in sorted(b_side):
        if _nu_without(work, {v}) >= k:
            v_free = v
            break
    if v_free is None:
        raise ConditionViolatedError("condition C2 does not hold")
    keep = [x for x in range(g.n) if x != v_free]
    sub, vmap = induced_subgraph(work, keep)
    anchor = frozenset(
        sorted(edge(vmap[x], vmap[y]) for (x, y) in max_matching(sub))[:k]
    )
    fwd = _route_via_free_vertex(work, part, v_free, anchor, m1)
    bwd = _route_via_free_vertex(work, part, v_free, anchor, m2)
    _cancel_common_tail(fwd, bwd)
    moves = fwd + [invert_move(mv) for mv in reversed(bwd)]
    return ReconfigSequence(MODE_FLIP_SLIDE, tuple(moves))


def _route_via_free_vertex(
    g: Graph, part: RootPartition, v: int, anchor: frozenset[Edge], m: frozenset[Edge]
) -> list[Move]:
    a_side = part.a
    sm = _Side(g, anchor)
    si = _Side(g, m)
    while True:
        cycles = [
            c
            for c in symmetric_difference_components(frozenset(sm.m), frozenset(si.m))
            if c.kind == "even_cycle"
        ]
        if not cycles:
            break
        cyc = list(cycles[0].vertices)
        start = None
        for i, x in enumerate(cyc):
            if x in a_side and edge(x, cyc[(i + 1) % len(cyc)]) in sm.m:
                start = i
                break
        if start is None:
            cyc.reverse()
            for i, x in enumerate(cyc):
                if x in a_side and edge(x, cyc[(i + 1) % len(cyc)]) in sm.m:
                    start = i
                    break
        if start is None:
            raise RuntimeError("internal: difference cycle avoids side A")
        cyc = cyc[start:] + cyc[:start]
        t = len(cyc) // 2
        sm.slide(edge(cyc[0], cyc[1]), edge(cyc[0], v))
        for i in range(1, t):
            sm.slide(edge(cyc[2 * i], cyc[2 * i + 1]), edge(cyc[2 * i - 1], cyc[2 * i]))
        sm.slide(edge(cyc[0], v), edge(cyc[-1], cyc[0]))
    _make_equal_cycle_free(g, si, sm)
    return _glue(g, si, sm)


# ---------------------------------------------------------------------------
# full solver


@dataclass(frozen=True)
class CographResult:
    yes: bool
    sequence: Optional[ReconfigSequence]


def _restrict(m: frozenset[Edge], vertices: set[int], idx: dict[int, int]) -> frozenset[Edge]:
    return frozenset(
        edge(idx[u], idx[v]) for (u, v) in m if u in vertices and v in vertices
    )


def _map_moves(moves, vmap: tuple[int, ...]) -> list[Move]:
    out: list[Move] = []
    for mv in moves:
        if isinstance(mv, Flip):
            out.append(canonical_flip(tuple(vmap[v] for v in mv.cycle)))
        else:
            out.append(
                Slide(
                    (vmap[mv.removed[0]], vmap[mv.removed[1]]),
                    (vmap[mv.added[0]], vmap[mv.added[1]]),
                )
            )
    return out


def _solve_rec(g: Graph, m1: frozenset[Edge], m2: frozenset[Edge]) -> Optional[list[Move]]:
    if len(m1) != len(m2):
        return None
    comps = connected_components(g)
    if len(comps) > 1:
        out: list[Move] = []
        for comp in comps:
            vs = set(comp)
            sub, vmap = induced_subgraph(g, comp)
            idx = {v: i for i, v in enumerate(vmap)}
            r = _solve_rec(sub, _restrict(m1, vs, idx), _restrict(m2, vs, idx))
            if r is None:
                return None
            out.extend(_map_moves(r, vmap))
        return out
    if g.n <= 1 or len(m1) == 0:
        return [] if m1 == m2 else None  # empty matchings are equal here
    part = root_partition(g)
    k = len(m1)
    cond = check_conditions(g, part, k)
    if cond.c1:
        return list(transform_with_B_edge(g, part, m1, m2).moves)
    if cond.c2:
        return list(transform_with_free_B_vertex(g, part, m1, m2).moves)
    a_sorted = sorted(part.a)
    sub, vmap = induced_subgraph(g, a_sorted)
    idx = {v: i for i, v in enumerate(vmap)}
    m1a = _restrict(m1, part.a, idx)
    m2a = _restrict(m2, part.a, idx)
    sub_moves = _solve_rec(sub, m1a, m2a)
    if sub_moves is None:
        return None
    return _lift_from_a(g, part, m1, m2, _map_moves(sub_moves, vmap))


def _lift_from_a(
    g: Graph, part: RootPartition, m1: frozenset[Edge], m2: frozenset[Edge], a_moves
) -> list[Move]:
    """Replay A-side moves on the full graph (blocked slides become flips
    with the B-partner), then align which A-vertices serve B and repair
    the A-B assignment by transposition flips."""
    s = _Side(g, m1)
    for mv in a_moves:
        if isinstance(mv, Flip):
            s.flip(mv.cycle)
            continue
        piv = mv.pivot
        far = mv.added[0] if mv.added[1] == piv else mv.added[1]
        if far not in s.partner:
            s.slide(mv.removed, mv.added)
        else:
            x = s.partner[far]
            other = mv.removed[0] if mv.removed[1] == piv else mv.removed[1]
            s.flip((other, piv, far, x))
    tar = partner_map(m2)
    cur_a = {a for a in part.a if a in s.partner and s.partner[a] in part.b}
    tar_a = {a for a in part.a if a in tar and tar[a] in part.b}
    for a in sorted(cur_a - tar_a):
        a2 = min(tar_a - cur_a)
        bpart = s.partner[a]
        s.slide(edge(a, bpart), edge(bpart, a2))
        cur_a.discard(a)
        cur_a.add(a2)
    for bvert in sorted(part.b):
        want = tar.get(bvert)
        have = s.partner.get(bvert)
        if want is None or have is None:
            raise RuntimeError("internal: B-vertex unmatched though C2 fails")
        if have != want:
            b2 = s.partner[want]
            s.flip((bvert, have, b2, want))
    if s.m != set(m2):
        raise RuntimeError("internal: lift did not reach the target")
    return s.moves


def solve_cograph(g: Graph, m_ini, m_tar) -> CographResult:
    """Decide flip+slide reachability between two matchings of a cograph
    and produce a verified sequence on YES."""
    m_ini = frozenset(edge(*x) for x in m_ini)
    m_tar = frozenset(edge(*x) for x in m_tar)
    for m in (m_ini, m_tar):
        if matching_status(g, m).kind == "not_matching":
            raise SizeMismatchError("input is not a matching")
    if len(m_ini) != len(m_tar):
        return CographResult(False, None)
    moves = _solve_rec(g, m_ini, m_tar)
    if moves is None:
        return CographResult(False, None)
    return CographResult(True, ReconfigSequence(MODE_FLIP_SLIDE, tuple(moves)))


def reachability_class(g: Graph, m) -> tuple:
    """Invariant deciding reachability: two matchings of ``g`` are
    connected under flips+slides iff their classes are equal."""
    m = frozenset(edge(*x) for x in m)

    def rec(sub: Graph, mm: frozenset[Edge]) -> tuple:
        comps = connected_components(sub)
        if len(comps) > 1:
            parts = []
            for comp in comps:
                vs = set(comp)
                s2, vmap = induced_subgraph(sub, comp)
                idx = {v: i for i, v in enumerate(vmap)}
                parts.append(rec(s2, _restrict(mm, vs, idx)))
            return ("u", tuple(parts))
        k = len(mm)
        if sub.n <= 1 or k == 0:
            return ("k", k)
        part = root_partition(sub)
        cond = check_conditions(sub, part, k)
        if cond.c1 or cond.c2:
            return ("k", k)
        a_sorted = sorted(part.a)
        s2, vmap = induced_subgraph(sub, a_sorted)
        idx = {v: i for i, v in enumerate(vmap)}
        return ("k", k, rec(s2, _restrict(mm, part.a, idx)))

    return rec(g, m)
