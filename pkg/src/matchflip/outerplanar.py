"""Perfect matching reconfiguration on outerplanar graphs.

The decision procedure repeatedly applies three reductions, each of which
preserves the answer exactly:

* forced edges: a degree-<=1 vertex must use its only edge in every
  perfect matching, so both endpoints can be removed;
* cut splitting: at a cut vertex the unique odd component (with the cut
  vertex) separates from the rest, and edges from the cut vertex to other
  components can never be matched or flipped;
* degree-two pairs: for an edge e = uw whose endpoints both have degree
  two, with third neighbors x (of u) and y (of w): if xy is not an edge,
  e lies on no 4-cycle, so its matched status is frozen (answer NO if it
  disagrees between the matchings, otherwise drop e or the pair); if xy
  is an edge, the pair contracts onto the chord xy.

Even chords of a 2-connected block's boundary cycle cannot occur in any
perfect matching nor in any flip, so they are purged whenever a block is
re-scanned; after purging, a block always offers an adjacent degree-two
pair, which keeps the reduction moving.

Sequence construction exploits that a pair contraction lifts with at most
one extra flip on each side: flipping the square (x, u, w, y) toggles
between "e matched" and "boundary edges matched", after which the reduced
sequence replays verbatim.  The emitted sequence is therefore the
chronological list of initial-side square flips followed by the
target-side square flips in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    NotOuterplanarError,
    NotPerfectError,
    NotTwoConnectedError,
)
from .graph import (
    Edge,
    Graph,
    MODE_FLIP,
    Move,
    ReconfigSequence,
    canonical_flip,
    connected_components,
    edge,
    matching_status,
    partner_map,
)


@dataclass(frozen=True)
class BoundaryOrder:
    """Cyclic vertex order of a 2-connected outerplanar graph's outer face."""

    order: tuple[int, ...]


# --- reduction trace ------------------------------------------------------


@dataclass(frozen=True)
class SplitStep:
    cut_vertex: int
    side: tuple[int, ...]


@dataclass(frozen=True)
class RemoveEvenChordStep:
    edge: Edge


@dataclass(frozen=True)
class Case1DropStep:
    edge: Edge


@dataclass(frozen=True)
class Case1RemoveStep:
    pair: Edge


@dataclass(frozen=True)
class ForcedPairStep:
    edge: Edge


@dataclass(frozen=True)
class Case2Step:
    pair: tuple[int, int]  # (u, w) with left adjacent to u, right to w
    left: int
    right: int
    e_in_ini: bool
    e_in_tar: bool


TraceStep = Union[
    SplitStep, RemoveEvenChordStep, Case1DropStep, Case1RemoveStep, ForcedPairStep, Case2Step
]


@dataclass
class ReductionTrace:
    steps: list[TraceStep] = field(default_factory=list)


@dataclass(frozen=True)
class SubInstance:
    graph: Graph
    m_ini: frozenset[Edge]
    m_tar: frozenset[Edge]
    vertex_map: tuple[int, ...]  # local index -> original vertex


@dataclass(frozen=True)
class OuterplanarResult:
    yes: bool
    sequence: Optional[ReconfigSequence]
    trace: ReductionTrace


# ---------------------------------------------------------------------------
# biconnectivity


def biconnected_blocks(
    adj: Sequence[Iterable[int]] | dict, vertices: Iterable[int]
) -> tuple[list[set[int]], set[int]]:
    """Blocks (2-connected components, bridges as 2-sets) and cut vertices
    of the subgraph induced by ``vertices``.  Iterative Tarjan."""
    verts = set(vertices)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[set[int]] = []
    cuts: set[int] = set()
    counter = 0
    for root in sorted(verts):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack: list[Edge] = []
        root_children = 0
        it_stack = [(root, None, iter([w for w in adj[root] if w in verts]))]
        while it_stack:
            v, parent, it = it_stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    estack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    it_stack.append((w, v, iter([x for x in adj[w] if x in verts])))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            it_stack.pop()
            if not it_stack:
                break
            u = it_stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                blk: set[int] = set()
                while estack and estack[-1] != (u, v):
                    a, b = estack.pop()
                    blk.add(a)
                    blk.add(b)
                if estack:
                    a, b = estack.pop()
                    blk.add(a)
                    blk.add(b)
                if blk:
                    blocks.append(blk)
                if u == root:
                    root_children += 1
                else:
                    cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
        if root_children == 0 and len([w for w in adj[root] if w in verts]) == 0:
            blocks.append({root})
    return blocks, cuts


def _cut_vertices(adj, vertices: Iterable[int]) -> set[int]:
    return biconnected_blocks(adj, vertices)[1]


# ---------------------------------------------------------------------------
# boundary cycle by ear contraction


def _boundary_cycle(adj: dict[int, set[int]], vertices: set[int]) -> list[int]:
    """Hamiltonian boundary of a 2-connected outerplanar vertex set.

    Repeatedly contracts a degree-two ear, adding a virtual edge between
    its neighbors, then unwinds the contractions to rebuild the cycle.
    Raises :class:`NotOuterplanarError` on structural failure.
    """
    n = len(vertices)
    if n < 3:
        raise NotTwoConnectedError("boundary cycle needs at least 3 vertices")
    work: dict[int, set[int]] = {v: set(adj[v]) & vertices for v in vertices}
    m = sum(len(s) for s in work.values()) // 2
    if m > 2 * n - 3:
        raise NotOuterplanarError(f"too many edges for outerplanar: {m} > {2 * n - 3}")
    alive = set(vertices)
    stack2 = [v for v in alive if len(work[v]) == 2]
    insertions: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        v = None
        while stack2:
            c = stack2.pop()
            if c in alive and len(work[c]) == 2:
                v = c
                break
        if v is None:
            raise NotOuterplanarError("no degree-two vertex during ear contraction")
        a, b = work[v]
        alive.discard(v)
        work[a].discard(v)
        work[b].discard(v)
        del work[v]
        if b not in work[a]:
            work[a].add(b)
            work[b].add(a)
        insertions.append((v, a, b))
        for t in (a, b):
            if len(work[t]) == 2:
                stack2.append(t)
    tri = sorted(alive)
    if any(len(work[v]) != 2 for v in tri):
        raise NotOuterplanarError("contraction base is not a triangle")
    x, y, z = tri
    if y not in work[x] or z not in work[x] or z not in work[y]:
        raise NotOuterplanarError("contraction base is not a triangle")
    cycle = [x, y, z]
    nxt = {x: y, y: z, z: x}
    prv = {y: x, z: y, x: z}
    for v, a, b in reversed(insertions):
        if nxt.get(a) == b:
            left, right = a, b
        elif nxt.get(b) == a:
            left, right = b, a
        else:
            raise NotOuterplanarError("ear endpoints not adjacent at unwind")
        nxt[left] = v
        nxt[v] = right
        prv[right] = v
        prv[v] = left
    start = cycle[0]
    out = [start]
    cur = nxt[start]
    while cur != start:
        out.append(cur)
        cur = nxt[cur]
    if len(out) != n:
        raise NotOuterplanarError("rebuilt boundary does not cover all vertices")
    for i, v in enumerate(out):
        w = out[(i + 1) % n]
        if w not in adj[v]:
            raise NotOuterplanarError(f"boundary neighbors ({v}, {w}) not adjacent")
    _check_noncrossing(adj, out)
    return out


def _check_noncrossing(adj, order: list[int]) -> None:
    """Chords must nest: no chords (a, c), (b, d) with a < b < c < d."""
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    open_at: list[list[int]] = [[] for _ in range(n)]
    close_at: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        for w in adj[v]:
            if w in pos and pos[v] < pos[w]:
                i, j = pos[v], pos[w]
                if j - i in (1, n - 1):
                    continue
                open_at[i].append(j)
                close_at[j].append(i)
    stack: list[int] = []
    for p in range(n):
        for _ in close_at[p]:
            if not stack or stack[-1] != p:
                raise NotOuterplanarError("crossing chords on the boundary cycle")
            stack.pop()
        for j in sorted(open_at[p], reverse=True):
            stack.append(j)
    if stack:
        raise NotOuterplanarError("crossing chords on the boundary cycle")


def boundary_order(g: Graph) -> BoundaryOrder:
    """The unique Hamiltonian boundary cycle of a 2-connected outerplanar
    graph, certified (consecutive adjacency and non-crossing chords)."""
    verts = set(range(g.n))
    if g.n < 3:
        raise NotTwoConnectedError("need at least 3 vertices")
    comps = connected_components(g)
    if len(comps) != 1:
        raise NotTwoConnectedError("graph is disconnected")
    if _cut_vertices(g.adj, verts):
        raise NotTwoConnectedError("graph has a cut vertex")
    adj = {v: set(g.adj[v]) for v in verts}
    return BoundaryOrder(tuple(_boundary_cycle(adj, verts)))


def verify_boundary_order(g: Graph, order) -> bool:
    """Check a claimed boundary cycle: Hamiltonian, consecutive vertices
    adjacent, chords non-crossing."""
    if isinstance(order, BoundaryOrder):
        order = order.order
    order = list(order)
    if sorted(order) != list(range(g.n)) or g.n < 3:
        return False
    for i, v in enumerate(order):
        if order[(i + 1) % g.n] not in g.adj[v]:
            return False
    try:
        _check_noncrossing({v: g.adj[v] for v in range(g.n)}, order)
    except NotOuterplanarError:
        return False
    return True


def is_outerplanar(g: Graph) -> bool:
    """Every biconnected block admits a certified boundary cycle."""
    if g.m > max(0, 2 * g.n - 3):
        return False
    blocks, _ = biconnected_blocks(g.adj, range(g.n))
    for blk in blocks:
        if len(blk) <= 2:
            continue
        adj = {v: set(g.adj[v]) & blk for v in blk}
        try:
            _boundary_cycle(adj, set(blk))
        except (NotOuterplanarError, NotTwoConnectedError):
            return False
    return True


# ---------------------------------------------------------------------------
# cut-vertex splitting (public operation)


def split_at_cut_vertices(
    g: Graph, m_ini: frozenset[Edge], m_tar: frozenset[Edge]
) -> list[SubInstance]:
    """Recursively split at cut vertices into 2-connected (or K2)
    sub-instances with restricted matchings."""
    for m in (m_ini, m_tar):
        if matching_status(g, m).kind != "perfect":
            raise NotPerfectError("matchings must be perfect")
    out: list[SubInstance] = []

    def restrict(vertices: list[int]) -> SubInstance:
        vmap = sorted(vertices)
        idx = {v: i for i, v in enumerate(vmap)}
        vs = set(vmap)
        sub_edges = [
            (idx[u], idx[v]) for (u, v) in g.edges if u in vs and v in vs
        ]
        sub = Graph(len(vmap), sub_edges)
        mi = frozenset(edge(idx[u], idx[v]) for (u, v) in m_ini if u in vs and v in vs)
        mt = frozenset(edge(idx[u], idx[v]) for (u, v) in m_tar if u in vs and v in vs)
        return SubInstance(sub, mi, mt, tuple(vmap))

    def rec(vertices: list[int]):
        for comp in connected_components(g, vertices):
            if len(comp) <= 2:
                out.append(restrict(comp))
                continue
            cuts = _cut_vertices(g.adj, comp)
            cuts = {v for v in cuts if len(set(g.adj[v]) & set(comp)) > 1}
            if not cuts:
                out.append(restrict(comp))
                continue
            v = min(cuts)
            rest = [w for w in comp if w != v]
            side_comps = connected_components(g, rest)
            odd = [c for c in side_comps if len(c) % 2 == 1]
            x = min(odd, key=lambda c: c[0])
            rec(sorted(x + [v]))
            rec([w for w in rest if w not in set(x)])

    rec(list(range(g.n)))
    return out


# ---------------------------------------------------------------------------
# the solver


class _No(Exception):
    pass


def solve_outerplanar(
    g: Graph, m_ini: frozenset[Edge], m_tar: frozenset[Edge]
) -> OuterplanarResult:
    """Decide flip reachability of two perfect matchings and, on YES,
    produce a verified flip sequence of length at most n."""
    for m in (m_ini, m_tar):
        if matching_status(g, m).kind != "perfect":
            raise NotPerfectError("both input matchings must be perfect")
    trace = ReductionTrace()
    if g.n == 0:
        return OuterplanarResult(True, ReconfigSequence(MODE_FLIP, ()), trace)

    adj: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
    alive: set[int] = set(range(g.n))
    p1 = partner_map(m_ini)
    p2 = partner_map(m_tar)
    pre: list[Move] = []
    post: list[Move] = []

    low: list[int] = []   # vertices whose degree may have dropped to <= 1
    cand: list[int] = []  # vertices whose degree may be exactly 2
    dirty: set[int] = set(alive)  # regions structural scans must revisit
    ops = 0  # reduction counter for O(1) stall detection

    def kill_pair(u: int, w: int) -> None:
        """Remove two matched-together vertices and their incident edges."""
        nonlocal ops
        ops += 1
        for v in (u, w):
            alive.discard(v)
            dirty.discard(v)
            p1.pop(v, None)
            p2.pop(v, None)
        for v in (u, w):
            for t in adj[v]:
                if t in alive:
                    adj[t].discard(v)
                    dirty.add(t)
                    d = len(adj[t])
                    if d <= 1:
                        low.append(t)
                    elif d == 2:
                        cand.append(t)
            adj[v] = set()

    def drop_edge(u: int, w: int) -> None:
        nonlocal ops
        ops += 1
        adj[u].discard(w)
        adj[w].discard(u)
        for t in (u, w):
            dirty.add(t)
            d = len(adj[t])
            if d <= 1:
                low.append(t)
            elif d == 2:
                cand.append(t)

    def fire_pair(u: int, w: int) -> None:
        e = edge(u, w)
        x = next(iter(adj[u] - {w}))
        y = next(iter(adj[w] - {u}))
        e1 = p1.get(u) == w
        e2 = p2.get(u) == w
        if x == y:
            # triangle tip: e is forced into every perfect matching
            if not (e1 and e2):
                raise _No()
            trace.steps.append(Case1RemoveStep(e))
            kill_pair(u, w)
            return
        if y in adj[x]:
            # contract the pair onto the chord xy
            if not e1 and (p1.get(u) != x or p1.get(w) != y):
                raise RuntimeError("internal: degree-two pair not matched as forced")
            if not e2 and (p2.get(u) != x or p2.get(w) != y):
                raise RuntimeError("internal: degree-two pair not matched as forced")
            if e1:
                del p1[u], p1[w]
            else:
                p1[x], p1[y] = y, x
                del p1[u], p1[w]
                pre.append(canonical_flip((x, u, w, y)))
            if e2:
                del p2[u], p2[w]
            else:
                p2[x], p2[y] = y, x
                del p2[u], p2[w]
                post.append(canonical_flip((x, u, w, y)))
            trace.steps.append(Case2Step((u, w), x, y, e1, e2))
            case2_mark(u, w, x, y)
            return
        # e lies on no 4-cycle: its matched status never changes
        if e1 != e2:
            raise _No()
        if e1 and e2:
            trace.steps.append(Case1RemoveStep(e))
            kill_pair(u, w)
        else:
            trace.steps.append(Case1DropStep(e))
            drop_edge(u, w)

    def case2_mark(u: int, w: int, x: int, y: int) -> None:
        nonlocal ops
        ops += 1
        for v in (u, w):
            alive.discard(v)
            dirty.discard(v)
        for v, t in ((u, x), (w, y)):
            adj[t].discard(v)
            adj[v] = set()
            dirty.add(t)
            d = len(adj[t])
            if d <= 1:
                low.append(t)
            elif d == 2:
                cand.append(t)

    def drain() -> None:
        while low or cand:
            while low:
                v = low.pop()
                if v not in alive:
                    continue
                d = len(adj[v])
                if d == 0:
                    raise RuntimeError("internal: isolated vertex with live matching")
                if d == 1:
                    t = next(iter(adj[v]))
                    if p1.get(v) != t or p2.get(v) != t:
                        raise _No()
                    trace.steps.append(ForcedPairStep(edge(v, t)))
                    kill_pair(v, t)
            while cand:
                v = cand.pop()
                if v not in alive or len(adj[v]) != 2:
                    continue
                mate = None
                for w in adj[v]:
                    if len(adj[w]) == 2:
                        mate = w
                        break
                if mate is not None:
                    fire_pair(v, mate)
                    break  # re-check low before more pairs

    def structural() -> bool:
        progressed = False
        # components untouched since their last scan were already purged,
        # split and seeded; only revisit regions with recent reductions
        seeds = set(dirty)
        dirty.clear()
        for comp in _components_from(adj, alive, seeds):
            if len(comp) % 2 == 1:
                raise RuntimeError("internal: odd component with perfect matchings")
            if len(comp) <= 2:
                for v in comp:
                    low.append(v)
                progressed = True
                continue
            blocks, cuts = biconnected_blocks(adj, comp)
            if cuts:
                # every perfect matching pairs a cut vertex into its unique
                # odd side, which is the branch through the block holding
                # its matched edge; edges into other blocks can never be
                # matched or flipped, so all cut vertices sever at once
                blocks_of: dict[int, list[set[int]]] = {}
                for blk in blocks:
                    for bv in blk:
                        blocks_of.setdefault(bv, []).append(blk)
                for v in sorted(cuts):
                    keep = None
                    for blk in blocks_of[v]:
                        if p1[v] in blk:
                            keep = blk
                            break
                    if keep is None or p2[v] not in keep:
                        raise RuntimeError("internal: matched partners straddle blocks")
                    trace.steps.append(
                        SplitStep(v, tuple(sorted(w for w in adj[v] if w in keep)))
                    )
                    for t in list(adj[v]):
                        if t not in keep:
                            drop_edge(v, t)
                progressed = True
                continue
            # 2-connected block: purge even chords of its boundary cycle
            order = _boundary_cycle(adj, set(comp))
            pos = {v: i for i, v in enumerate(order)}
            removed = False
            for v in comp:
                for w in [w for w in adj[v] if pos[v] < pos.get(w, -1)]:
                    gap = pos[w] - pos[v]
                    if gap % 2 == 0:
                        if p1.get(v) == w or p2.get(v) == w:
                            raise RuntimeError("internal: even chord inside a matching")
                        trace.steps.append(RemoveEvenChordStep(edge(v, w)))
                        drop_edge(v, w)
                        removed = True
            if removed:
                progressed = True
            for v in comp:
                if v in alive and len(adj[v]) == 2:
                    cand.append(v)
        return progressed

    try:
        for v in list(alive):
            d = len(adj[v])
            if d <= 1:
                low.append(v)
            elif d == 2:
                cand.append(v)
        while True:
            drain()
            if not alive:
                break
            before = ops
            progressed = structural()
            drain()
            if alive and not progressed and ops == before:
                raise RuntimeError("internal: reduction stalled (no degree-two pair)")
    except _No:
        return OuterplanarResult(False, None, trace)

    moves = tuple(pre + post[::-1])
    return OuterplanarResult(True, ReconfigSequence(MODE_FLIP, moves), trace)


def _components_from(
    adj: dict[int, set[int]], alive: set[int], seeds: set[int]
) -> list[list[int]]:
    """Connected components of the live graph that contain a seed."""
    comps: list[list[int]] = []
    seen: set[int] = set()
    for s in sorted(seeds):
        if s in seen or s not in alive:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps
