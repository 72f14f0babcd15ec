"""Graph/matching data model, move semantics and sequence verification.

Everything downstream (solvers, oracle, generators) works on the types in
this module.  Vertices are dense integers ``0..n-1``; an edge is an ordered
pair ``(u, v)`` with ``u < v``; a matching is a frozenset of such pairs.
All values are immutable after construction and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Optional, Sequence, Union

from .errors import (
    DuplicateEdgeError,
    EdgeNotInGraphError,
    InvalidFlipError,
    InvalidSlideError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]
EdgeSet = frozenset  # of Edge


def edge(u: int, v: int) -> Edge:
    """Canonical form of the undirected edge {u, v}."""
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[Sequence[int]]) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in pairs)


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Construction validates simplicity: self-loops, duplicate edges and
    out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise VertexOutOfRangeError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            e = edge(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(seen)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def validate_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, normalizing edges to ``u < v`` pairs."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# matchings


@dataclass(frozen=True)
class MatchingStatus:
    kind: Literal["not_matching", "matching", "perfect"]
    size: int


def matching_status(g: Graph, edges: Iterable[Sequence[int]]) -> MatchingStatus:
    """Classify an edge set as a (perfect) matching or not.

    Raises :class:`EdgeNotInGraphError` if some edge is absent from ``g``.
    """
    es = edge_set(edges)
    covered: set[int] = set()
    independent = True
    for u, v in es:
        if not g.has_edge(u, v):
            raise EdgeNotInGraphError(f"edge ({u}, {v}) not in graph")
        if u in covered or v in covered:
            independent = False
        covered.add(u)
        covered.add(v)
    if not independent:
        return MatchingStatus("not_matching", len(es))
    if len(covered) == g.n:
        return MatchingStatus("perfect", len(es))
    return MatchingStatus("matching", len(es))


def is_matching(g: Graph, edges: frozenset[Edge]) -> bool:
    try:
        return matching_status(g, edges).kind != "not_matching"
    except EdgeNotInGraphError:
        return False


def partner_map(matching: Iterable[Edge]) -> dict[int, int]:
    """Vertex -> matched partner lookup for a matching."""
    p: dict[int, int] = {}
    for u, v in matching:
        p[u] = v
        p[v] = u
    return p


def covered_vertices(matching: Iterable[Edge]) -> set[int]:
    c: set[int] = set()
    for u, v in matching:
        c.add(u)
        c.add(v)
    return c


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class Flip:
    """Exchange the matched and unmatched edges of an alternating even cycle.

    ``cycle`` lists the vertices in traversal order.  The plain flip
    operation uses a 4-cycle; k-flip sequences carry longer cycles.
    """

    cycle: tuple[int, ...]

    def __post_init__(self):
        c = self.cycle
        if len(c) < 4 or len(c) % 2 != 0 or len(set(c)) != len(c):
            raise InvalidFlipError(f"bad flip cycle {c}")

    def cycle_edges(self) -> list[Edge]:
        c = self.cycle
        return [edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


@dataclass(frozen=True)
class Slide:
    """Replace matched edge ``removed`` by incident edge ``added``.

    The two edges share the pivot vertex; the far endpoint of ``added``
    must be unmatched before the move.
    """

    removed: Edge
    added: Edge

    def __post_init__(self):
        object.__setattr__(self, "removed", edge(*self.removed))
        object.__setattr__(self, "added", edge(*self.added))
        if not set(self.removed) & set(self.added):
            raise InvalidSlideError(
                f"slide edges {self.removed}, {self.added} share no pivot"
            )
        if self.removed == self.added:
            raise InvalidSlideError("slide must change the matching")

    @property
    def pivot(self) -> int:
        (a, b), (c, d) = self.removed, self.added
        return a if a in (c, d) else b


Move = Union[Flip, Slide]


def canonical_flip(cycle: Sequence[int]) -> Flip:
    """Rotate/reflect a cycle so it starts at its smallest vertex and
    continues toward the smaller of that vertex's two cycle neighbors."""
    c = list(cycle)
    k = len(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return Flip(tuple(c))


def invert_move(move: Move) -> Move:
    """The move undoing ``move`` (flips are involutions)."""
    if isinstance(move, Flip):
        return move
    return Slide(move.added, move.removed)


def apply_move(g: Graph, matching: frozenset[Edge], move: Move) -> frozenset[Edge]:
    """Apply a flip or slide, validating all preconditions.

    Raises :class:`InvalidFlipError` / :class:`InvalidSlideError` when the
    move does not apply to ``matching`` in ``g``.
    """
    if isinstance(move, Flip):
        cyc_edges = move.cycle_edges()
        for e in cyc_edges:
            if e[1] not in g.adj[e[0]]:
                raise InvalidFlipError(f"cycle edge {e} not in graph")
        even = frozenset(cyc_edges[0::2])
        odd = frozenset(cyc_edges[1::2])
        if even <= matching and not (odd & matching):
            inside = even
        elif odd <= matching and not (even & matching):
            inside = odd
        else:
            raise InvalidFlipError(
                f"cycle {move.cycle} is not alternating for this matching"
            )
        # Endpoints of the cycle are covered only by the cycle's own matched
        # edges, so the exchange stays a valid matching of equal size.
        outside = (even | odd) - inside
        return (matching - inside) | outside

    if isinstance(move, Slide):
        rem, add = move.removed, move.added
        if rem not in matching:
            raise InvalidSlideError(f"removed edge {rem} not in matching")
        if add[1] not in g.adj[add[0]]:
            raise InvalidSlideError(f"added edge {add} not in graph")
        pivot = move.pivot
        far = add[0] if add[1] == pivot else add[1]
        other = rem[0] if rem[1] == pivot else rem[1]
        if far == other:
            raise InvalidSlideError("slide does not move")
        covered = covered_vertices(matching)
        if far in covered:
            raise InvalidSlideError(f"target vertex {far} already matched")
        return (matching - {rem}) | {add}

    raise TypeError(f"unknown move {move!r}")


# ---------------------------------------------------------------------------
# symmetric difference structure


@dataclass(frozen=True)
class DiffComponent:
    """One connected component of M1 (symmetric difference) M2.

    ``kind`` is ``single_edge`` (one edge), ``alternating_path`` (>= 2
    edges, endpoints distinct) or ``even_cycle``.  ``vertices`` lists the
    component's vertices in path/cycle order.
    """

    kind: Literal["single_edge", "alternating_path", "even_cycle"]
    vertices: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        if self.kind == "even_cycle":
            return len(self.vertices)
        return len(self.vertices) - 1


def symmetric_difference_components(
    m1: frozenset[Edge], m2: frozenset[Edge]
) -> list[DiffComponent]:
    """Decompose M1 (triangle) M2 into single edges, paths and even cycles.

    Every vertex meets at most one edge of each matching, so components
    are paths or cycles whose edges alternate between the two matchings.
    """
    diff = m1 ^ m2
    nbr: dict[int, list[int]] = {}
    for u, v in diff:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    comps: list[DiffComponent] = []
    seen: set[int] = set()
    for start in sorted(nbr):
        if start in seen:
            continue
        if len(nbr[start]) == 2:
            continue  # cycle or path interior; handled from an endpoint
        # walk a path from this degree-1 endpoint
        path = [start]
        seen.add(start)
        prev, cur = start, nbr[start][0]
        while True:
            path.append(cur)
            seen.add(cur)
            nxt = [w for w in nbr[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        if path[-1] < path[0]:
            path.reverse()
        kind = "single_edge" if len(path) == 2 else "alternating_path"
        comps.append(DiffComponent(kind, tuple(path)))
    for start in sorted(nbr):
        if start in seen:
            continue
        # remaining vertices all have degree 2: even cycles
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(nbr[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            nxt = [w for w in nbr[cur] if w != prev]
            prev, cur = cur, nxt[0]
        comps.append(DiffComponent("even_cycle", tuple(cyc)))
    comps.sort(key=lambda c: c.vertices[0])
    return comps


# ---------------------------------------------------------------------------
# reconfiguration sequences

MODE_FLIP = "flip"
MODE_FLIP_SLIDE = "flip_slide"
MODE_KFLIP = "kflip"


@dataclass(frozen=True)
class ReconfigSequence:
    """An ordered list of moves under a fixed mode.

    ``flip`` allows 4-cycle flips only, ``flip_slide`` adds slides, and
    ``kflip`` allows flips on alternating cycles of length exactly ``k``.
    """

    mode: str
    moves: tuple[Move, ...]
    k: Optional[int] = None

    def __post_init__(self):
        if self.mode not in (MODE_FLIP, MODE_FLIP_SLIDE, MODE_KFLIP):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == MODE_KFLIP:
            if self.k is None or self.k < 4 or self.k % 2 != 0:
                raise ValueError(f"kflip mode needs even k >= 4, got {self.k}")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_sequence`.

    ``step`` is the index of the offending move; a final-matching mismatch
    reports ``step == len(moves)``.
    """

    ok: bool
    step: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


REASON_MODE = "mode_violation"
REASON_FLIP = "invalid_flip"
REASON_SLIDE = "invalid_slide"
REASON_FINAL = "final_mismatch"
REASON_INPUT = "invalid_matching"


def verify_sequence(
    g: Graph,
    m_ini: frozenset[Edge],
    seq: ReconfigSequence,
    m_tar: frozenset[Edge],
) -> Verdict:
    """Check a reconfiguration sequence move by move.

    Accepts iff every move applies validly in order, respects the mode,
    and the final matching equals ``m_tar``.  Problems are reported in the
    verdict, never raised.
    """
    for m in (m_ini, m_tar):
        try:
            if matching_status(g, m).kind == "not_matching":
                return Verdict(False, None, REASON_INPUT)
        except EdgeNotInGraphError:
            return Verdict(False, None, REASON_INPUT)
    cur = frozenset(m_ini)
    for i, move in enumerate(seq.moves):
        if isinstance(move, Slide) and seq.mode != MODE_FLIP_SLIDE:
            return Verdict(False, i, REASON_MODE)
        if isinstance(move, Flip):
            want = seq.k if seq.mode == MODE_KFLIP else 4
            if len(move.cycle) != want:
                return Verdict(False, i, REASON_MODE)
        try:
            cur = apply_move(g, cur, move)
        except InvalidFlipError:
            return Verdict(False, i, REASON_FLIP)
        except InvalidSlideError:
            return Verdict(False, i, REASON_SLIDE)
    if cur != frozenset(m_tar):
        return Verdict(False, len(seq.moves), REASON_FINAL)
    return Verdict(True)


# ---------------------------------------------------------------------------
# shared structural helpers


def four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles of ``g``, each reported once in canonical orientation
    (smallest vertex first, then its smaller cycle neighbor)."""
    out: list[tuple[int, int, int, int]] = []
    for a in range(g.n):
        nbrs = sorted(w for w in g.adj[a] if w > a)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                b, d = nbrs[i], nbrs[j]
                for c in g.adj[b] & g.adj[d]:
                    if c > a and c != b and c != d:
                        out.append((a, b, c, d))
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Relabeled induced subgraph plus its local-index -> original map."""
    vmap = tuple(sorted(set(vertices)))
    idx = {v: i for i, v in enumerate(vmap)}
    keep = set(vmap)
    edges = [(idx[u], idx[v]) for (u, v) in g.edges if u in keep and v in keep]
    return Graph(len(vmap), edges), vmap


def connected_components(g: Graph, vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Connected components (sorted vertex lists) of the induced subgraph."""
    verts = set(range(g.n)) if vertices is None else set(vertices)
    comps: list[list[int]] = []
    left = set(verts)
    while left:
        start = min(left)
        stack = [start]
        comp = {start}
        left.discard(start)
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps
