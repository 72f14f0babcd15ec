"""NCL machines, the gadget reduction to perfect matching reconfiguration,
and the instance transformations built on top of it.

An NCL machine is a degree-3 graph of AND vertices (incident weights
1, 1, 2) and OR vertices (2, 2, 2); a configuration orients every edge so
each vertex collects in-weight >= 2.  The reduction replaces every NCL
edge and vertex by a fixed gadget; gadgets share only *connector pairs*,
and which gadget covers a pair encodes the corresponding edge direction:
a pair covered by its AND/OR gadget means the edge points into that
vertex, a pair covered by the edge gadget means it points away.

Gadget layouts are shipped as data (vertex names, edges, the subdividable
"orange" edges); their behavior -- forbidden states unmatchable, states
within one orientation class flip-connected, class-to-class transitions
matching the legal orientation changes -- is re-derived by enumeration in
:func:`gadget_selftest` rather than trusted.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    BudgetExceededError,
    InvalidConfigurationError,
    KOddError,
    KTooSmallError,
    MalformedMachineError,
    NotBipartiteError,
    NotPerfectError,
    UnbalancedSidesError,
)
from .graph import Edge, Graph, edge, matching_status
from .oracle import MaskSpace

# ---------------------------------------------------------------------------
# gadget templates
#
# Edge gadget for an NCL edge between p and q: connector pairs (p0, p1)
# and (q0, q1) shared with the endpoint gadgets, four middle vertices.
# If all four connectors are covered from outside, m0 and m3 cannot be
# matched, which forbids the both-inward orientation.

EDGE_GADGET = {
    "vertices": ("p0", "p1", "q0", "q1", "m0", "m1", "m2", "m3"),
    "edges": (
        ("p0", "m0"),
        ("m0", "q0"),
        ("q1", "m3"),
        ("m3", "p1"),
        ("p0", "m1"),
        ("m1", "q0"),
        ("p1", "m2"),
        ("m2", "q1"),
        ("m1", "m2"),
    ),
    "orange": (("p0", "m0"), ("q1", "m3"), ("m1", "m2")),
    "pairs": {"p": ("p0", "p1"), "q": ("q0", "q1")},
}

# AND gadget: slot a carries the weight-2 edge, slots b and c the two
# weight-1 edges.  The pair edges (a0,a1), (b0,b1), (c0,c1) belong to
# this gadget, not to the adjacent edge gadgets.

AND_GADGET = {
    "vertices": ("a0", "a1", "b0", "b1", "c0", "c1", "i0", "i1"),
    "edges": (
        ("a0", "a1"),
        ("a1", "i1"),
        ("i1", "c0"),
        ("c0", "c1"),
        ("c1", "b1"),
        ("b1", "b0"),
        ("b0", "i0"),
        ("i0", "a0"),
        ("c1", "a1"),
        ("b1", "a0"),
    ),
    "orange": (("i1", "c0"), ("c1", "b1"), ("b0", "i0")),
    "pairs": {"a": ("a0", "a1"), "b": ("b0", "b1"), "c": ("c0", "c1")},
}

OR_GADGET = {
    "vertices": ("a0", "a1", "b0", "b1", "c0", "c1", "i0", "i1"),
    "edges": (
        ("a0", "a1"),
        ("a1", "c0"),
        ("c0", "c1"),
        ("c1", "b1"),
        ("b1", "b0"),
        ("b0", "a0"),
        ("a0", "i0"),
        ("i0", "b1"),
        ("a1", "i1"),
        ("i1", "c1"),
        ("b0", "i1"),
        ("c0", "i0"),
    ),
    "orange": (("a1", "c0"), ("c1", "b1"), ("b0", "a0")),
    "pairs": {"a": ("a0", "a1"), "b": ("b0", "b1"), "c": ("c0", "c1")},
}

VERTEX_GADGETS = {"and": AND_GADGET, "or": OR_GADGET}

# local 2-colorings; pairs straddle the split in every gadget
_GADGET_COLOR = {
    "and": {"a0": 0, "i1": 0, "c1": 0, "b0": 0, "a1": 1, "c0": 1, "b1": 1, "i0": 1},
    "or": {"a0": 0, "c0": 0, "b1": 0, "i1": 0, "a1": 1, "c1": 1, "b0": 1, "i0": 1},
    "edge": {"p0": 0, "q0": 0, "m2": 0, "m3": 0, "p1": 1, "q1": 1, "m0": 1, "m1": 1},
}


def _valid_inward_sets(kind: str) -> list[frozenset[str]]:
    """Slot subsets whose inward weights sum to >= 2."""
    weight = {"a": 2, "b": 1, "c": 1} if kind == "and" else {"a": 2, "b": 2, "c": 2}
    out = []
    for r in range(4):
        for combo in itertools.combinations("abc", r):
            if sum(weight[s] for s in combo) >= 2:
                out.append(frozenset(combo))
    return out


def _local_matchings_by_class(gadget: dict) -> dict[frozenset[str], list[tuple]]:
    """All gadget-internal matchings covering the internal vertices plus
    exactly the connector pairs of a slot subset, grouped by that subset.
    Gadget pairs straddle the bipartition, so partial pair coverage is
    impossible and the grouping is exhaustive."""
    names = gadget["vertices"]
    idx = {v: i for i, v in enumerate(names)}
    edges = [tuple(sorted((idx[a], idx[b]))) for a, b in gadget["edges"]]
    pair_sets = {s: frozenset(idx[x] for x in p) for s, p in gadget["pairs"].items()}
    connectors = frozenset().union(*pair_sets.values())
    internals = frozenset(range(len(names))) - connectors
    out: dict[frozenset[str], list[tuple]] = {}
    m = len(edges)
    for bits in range(1 << m):
        chosen = [edges[i] for i in range(m) if bits >> i & 1]
        covered: set[int] = set()
        ok = True
        for u, v in chosen:
            if u in covered or v in covered:
                ok = False
                break
            covered.add(u)
            covered.add(v)
        if not ok or not internals <= covered:
            continue
        slots = []
        bad = False
        for s, pair in pair_sets.items():
            hit = len(pair & covered)
            if hit == 1:
                bad = True  # cannot happen: pairs straddle the bipartition
                break
            if hit == 2:
                slots.append(s)
        if bad:
            continue
        out.setdefault(frozenset(slots), []).append(tuple(sorted(chosen)))
    for v in out.values():
        v.sort()
    return out


# ---------------------------------------------------------------------------
# NCL machines


@dataclass(frozen=True)
class NclMachine:
    """AND/OR constraint graph; parallel edges allowed, self-loops not."""

    vertex_types: tuple[str, ...]  # "and" | "or" per vertex
    edges: tuple[tuple[int, int, int], ...]  # (u, v, weight)

    @property
    def n(self) -> int:
        return len(self.vertex_types)

    def incident(self, v: int) -> list[int]:
        return [i for i, (a, b, _) in enumerate(self.edges) if v in (a, b)]


def validate_machine(machine: NclMachine) -> None:
    for t in machine.vertex_types:
        if t not in ("and", "or"):
            raise MalformedMachineError(f"unknown vertex type {t!r}")
    for u, v, w in machine.edges:
        if u == v:
            raise MalformedMachineError("self-loop NCL edge")
        if not (0 <= u < machine.n and 0 <= v < machine.n):
            raise MalformedMachineError("NCL edge endpoint out of range")
        if w not in (1, 2):
            raise MalformedMachineError(f"edge weight {w} not in {{1, 2}}")
    for v in range(machine.n):
        inc = machine.incident(v)
        if len(inc) != 3:
            raise MalformedMachineError(f"vertex {v} has degree {len(inc)}, need 3")
        weights = sorted(machine.edges[i][2] for i in inc)
        want = [1, 1, 2] if machine.vertex_types[v] == "and" else [2, 2, 2]
        if weights != want:
            raise MalformedMachineError(
                f"vertex {v} ({machine.vertex_types[v]}) has weights {weights}"
            )


def _slot_assignment(machine: NclMachine) -> list[dict[str, int]]:
    """Per NCL vertex: slot name -> incident edge index.  The weight-2
    edge of an AND vertex takes slot a; remaining slots go by edge index."""
    out = []
    for v in range(machine.n):
        inc = machine.incident(v)
        if machine.vertex_types[v] == "and":
            two = [i for i in inc if machine.edges[i][2] == 2]
            ones = sorted(i for i in inc if machine.edges[i][2] == 1)
            out.append({"a": two[0], "b": ones[0], "c": ones[1]})
        else:
            inc = sorted(inc)
            out.append({"a": inc[0], "b": inc[1], "c": inc[2]})
    return out


Configuration = tuple  # head vertex per edge, or None for neutral


def validate_ncl(machine: NclMachine, config: Sequence[Optional[int]]) -> bool:
    """True iff every vertex receives in-weight >= 2; a neutral edge
    (head ``None``) contributes to neither endpoint."""
    validate_machine(machine)
    if len(config) != len(machine.edges):
        raise InvalidConfigurationError("configuration length mismatch")
    inw = [0] * machine.n
    for head, (u, v, w) in zip(config, machine.edges):
        if head is None:
            continue
        if head not in (u, v):
            raise InvalidConfigurationError(f"head {head} not an endpoint")
        inw[head] += w
    return all(x >= 2 for x in inw)


def enumerate_configurations(machine: NclMachine) -> list[Configuration]:
    """All valid neutral-free configurations (exponential; test-scale)."""
    validate_machine(machine)
    out = []
    for choice in itertools.product(*[(u, v) for (u, v, _) in machine.edges]):
        if validate_ncl(machine, choice):
            out.append(tuple(choice))
    return out


def configuration_components(machine: NclMachine) -> dict[Configuration, int]:
    """Component id of each valid configuration under single-edge reversal."""
    configs = enumerate_configurations(machine)
    ids = {c: i for i, c in enumerate(configs)}
    comp = {}
    cid = 0
    for c in configs:
        if c in comp:
            continue
        comp[c] = cid
        q = deque([c])
        while q:
            cur = q.popleft()
            for i, (u, v, _) in enumerate(machine.edges):
                nxt = list(cur)
                nxt[i] = u if cur[i] == v else v
                nxt = tuple(nxt)
                if nxt in ids and nxt not in comp:
                    comp[nxt] = cid
                    q.append(nxt)
        cid += 1
    return comp


# sample machines (small enough for exhaustive checks)


def two_or_machine() -> NclMachine:
    return NclMachine(("or", "or"), ((0, 1, 2), (0, 1, 2), (0, 1, 2)))


def two_and_machine() -> NclMachine:
    """Exactly two valid configurations, not reachable from each other."""
    return NclMachine(("and", "and"), ((0, 1, 2), (0, 1, 1), (0, 1, 1)))


def k4_or_machine() -> NclMachine:
    edges = tuple((u, v, 2) for u in range(4) for v in range(u + 1, 4))
    return NclMachine(("or",) * 4, edges)


def mixed_machine() -> NclMachine:
    return NclMachine(
        ("and", "and", "or", "or"),
        ((0, 1, 1), (0, 1, 1), (0, 2, 2), (1, 3, 2), (2, 3, 2), (2, 3, 2)),
    )


def six_mixed_machine() -> NclMachine:
    return NclMachine(
        ("and", "and", "or", "or", "or", "or"),
        (
            (0, 1, 1),
            (0, 1, 1),
            (0, 2, 2),
            (1, 3, 2),
            (2, 4, 2),
            (2, 5, 2),
            (3, 4, 2),
            (3, 5, 2),
            (4, 5, 2),
        ),
    )


SAMPLE_MACHINES = {
    "two_or": two_or_machine,
    "two_and": two_and_machine,
    "k4_or": k4_or_machine,
    "mixed": mixed_machine,
    "six_mixed": six_mixed_machine,
}


# ---------------------------------------------------------------------------
# the reduction


@dataclass(frozen=True)
class VertexGadgetInfo:
    ncl_vertex: int
    kind: str
    local_to_global: dict
    edge_set: frozenset[Edge]
    slot_edges: dict  # slot -> NCL edge index


@dataclass(frozen=True)
class EdgeGadgetInfo:
    ncl_edge: int
    p_vertex: int  # NCL endpoint attached at the p-side pair
    q_vertex: int
    local_to_global: dict
    edge_set: frozenset[Edge]


@dataclass
class GadgetInstance:
    graph: Graph
    m_ini: frozenset[Edge]
    m_tar: frozenset[Edge]
    machine: NclMachine
    vertex_gadgets: tuple[VertexGadgetInfo, ...]
    edge_gadgets: tuple[EdgeGadgetInfo, ...]
    connector_pairs: dict  # (ncl vertex, ncl edge idx) -> (g0, g1)
    orange_edges: tuple[Edge, ...]
    k: int = 4
    subdivision: dict = field(default_factory=dict)  # orange edge -> path tuple

    def encode_configuration(self, config: Sequence[Optional[int]]) -> frozenset[Edge]:
        return _encode(self, tuple(config))

    def decode_matching(self, matching: frozenset[Edge]) -> Configuration:
        return _decode(self, frozenset(matching))


def reduce_ncl_to_pmr(
    machine: NclMachine,
    c_ini: Sequence[Optional[int]],
    c_tar: Sequence[Optional[int]],
) -> GadgetInstance:
    """Build the gadget graph and the perfect matchings encoding the two
    configurations.  Configurations must be valid and neutral-free."""
    validate_machine(machine)
    for c in (c_ini, c_tar):
        if any(h is None for h in c):
            raise InvalidConfigurationError("input configurations must not be neutral")
        if not validate_ncl(machine, c):
            raise InvalidConfigurationError("configuration violates in-weight bounds")
    slots = _slot_assignment(machine)
    nxt = 0
    vertex_infos = []
    connector_pairs: dict = {}
    all_edges: list[Edge] = []
    orange: list[Edge] = []
    color: dict[int, int] = {}
    for v in range(machine.n):
        kind = machine.vertex_types[v]
        gadget = VERTEX_GADGETS[kind]
        loc = {}
        for name in gadget["vertices"]:
            loc[name] = nxt
            color[nxt] = _GADGET_COLOR[kind][name]
            nxt += 1
        ed = frozenset(edge(loc[a], loc[b]) for a, b in gadget["edges"])
        all_edges.extend(sorted(ed))
        orange.extend(edge(loc[a], loc[b]) for a, b in gadget["orange"])
        for slot, eidx in slots[v].items():
            p0, p1 = gadget["pairs"][slot]
            connector_pairs[(v, eidx)] = (loc[p0], loc[p1])
        vertex_infos.append(VertexGadgetInfo(v, kind, loc, ed, dict(slots[v])))
    edge_infos = []
    for i, (u, v, _) in enumerate(machine.edges):
        p, q = (u, v) if u < v else (v, u)
        loc = {}
        for name in ("m0", "m1", "m2", "m3"):
            loc[name] = nxt
            nxt += 1
        pp = connector_pairs[(p, i)]
        qq = connector_pairs[(q, i)]
        # orient the gluing so the edge gadget's bipartition extends the
        # global coloring: p0 and q0 must land on connectors of one color
        loc["p0"], loc["p1"] = pp
        if color[qq[0]] == color[pp[0]]:
            loc["q0"], loc["q1"] = qq
        else:
            loc["q0"], loc["q1"] = qq[1], qq[0]
        base = color[pp[0]]
        for name in ("m0", "m1", "m2", "m3"):
            loc_color = _GADGET_COLOR["edge"][name]
            color[loc[name]] = base if loc_color == 0 else 1 - base
        ed = frozenset(edge(loc[a], loc[b]) for a, b in EDGE_GADGET["edges"])
        all_edges.extend(sorted(ed))
        orange.extend(edge(loc[a], loc[b]) for a, b in EDGE_GADGET["orange"])
        edge_infos.append(EdgeGadgetInfo(i, p, q, loc, ed))
    graph = Graph(nxt, all_edges)
    # structural guarantees, asserted on every build
    for u, v in graph.edges:
        if color[u] == color[v]:
            raise RuntimeError("internal: reduction output is not bipartite")
    if graph.n and max(graph.degree(v) for v in range(graph.n)) > 5:
        raise RuntimeError("internal: reduction output exceeds degree five")
    for (v, eidx), (g0, g1) in connector_pairs.items():
        if color[g0] == color[g1]:
            raise RuntimeError("internal: connector pair on one side of the split")
    inst = GadgetInstance(
        graph=graph,
        m_ini=frozenset(),
        m_tar=frozenset(),
        machine=machine,
        vertex_gadgets=tuple(vertex_infos),
        edge_gadgets=tuple(edge_infos),
        connector_pairs=connector_pairs,
        orange_edges=tuple(sorted(set(orange))),
    )
    inst.m_ini = _encode(inst, tuple(c_ini))
    inst.m_tar = _encode(inst, tuple(c_tar))
    return inst


_CLASS_TABLES = {
    kind: _local_matchings_by_class(g) for kind, g in VERTEX_GADGETS.items()
}
_EDGE_TABLE = _local_matchings_by_class(EDGE_GADGET)


def _encode(inst: GadgetInstance, config: Configuration) -> frozenset[Edge]:
    machine = inst.machine
    if len(config) != len(machine.edges):
        raise InvalidConfigurationError("configuration length mismatch")
    if not validate_ncl(machine, config):
        raise InvalidConfigurationError("invalid configuration")
    chosen: set[Edge] = set()
    for vg in inst.vertex_gadgets:
        inward = frozenset(
            s for s, eidx in vg.slot_edges.items() if config[eidx] == vg.ncl_vertex
        )
        table = _CLASS_TABLES[vg.kind]
        if inward not in table:
            raise InvalidConfigurationError(
                f"vertex {vg.ncl_vertex}: orientation {sorted(inward)} unmatchable"
            )
        names = VERTEX_GADGETS[vg.kind]["vertices"]
        local = table[inward][0]
        for a, b in local:
            chosen.add(edge(vg.local_to_global[names[a]], vg.local_to_global[names[b]]))
    enames = EDGE_GADGET["vertices"]
    for eg in inst.edge_gadgets:
        head = config[eg.ncl_edge]
        if head is None:
            raise InvalidConfigurationError("neutral edge in configuration")
        # the tail-side pair is covered by the edge gadget
        side = frozenset("p") if head == eg.q_vertex else frozenset("q")
        local = _EDGE_TABLE[side][0]
        for a, b in local:
            chosen.add(edge(eg.local_to_global[enames[a]], eg.local_to_global[enames[b]]))
    out = _expand_subdivided(inst, frozenset(chosen))
    if matching_status(inst.graph, out).kind != "perfect":
        raise RuntimeError("internal: encoding is not a perfect matching")
    return out


def _expand_subdivided(inst: GadgetInstance, m: frozenset[Edge]) -> frozenset[Edge]:
    if not inst.subdivision:
        return m
    out = set()
    for e in m:
        path = inst.subdivision.get(e)
        if path is None:
            out.add(e)
        else:
            for i in range(0, len(path) - 1, 2):
                out.add(edge(path[i], path[i + 1]))
    for e, path in inst.subdivision.items():
        if e not in m:
            for i in range(1, len(path) - 1, 2):
                out.add(edge(path[i], path[i + 1]))
    return frozenset(out)


def _project_subdivided(inst: GadgetInstance, m: frozenset[Edge]) -> frozenset[Edge]:
    if not inst.subdivision:
        return m
    path_edges = set()
    out = set()
    for e, path in inst.subdivision.items():
        for i in range(len(path) - 1):
            path_edges.add(edge(path[i], path[i + 1]))
        if edge(path[0], path[1]) in m:
            out.add(e)
    for e in m:
        if e not in path_edges:
            out.add(e)
    return frozenset(out)


def _decode(inst: GadgetInstance, matching: frozenset[Edge]) -> Configuration:
    """Orientation encoded by a perfect matching; neutral edges decode to
    ``None``.

    Flips move whole connector pairs between gadgets (or stay inside one
    gadget), so every matching reachable from an encoded one covers each
    pair wholly from one side.  Stray perfect matchings that split a pair
    exist but sit in unreachable flip components; they are rejected."""
    m = _project_subdivided(inst, matching)
    cover: dict[int, Edge] = {}
    for e in m:
        cover[e[0]] = e
        cover[e[1]] = e
    heads: list[Optional[int]] = []
    for eg in inst.edge_gadgets:
        states = []
        for ncl_v in (eg.p_vertex, eg.q_vertex):
            g0, g1 = inst.connector_pairs[(ncl_v, eg.ncl_edge)]
            by_edge_gadget = [cover[g0] in eg.edge_set, cover[g1] in eg.edge_set]
            if by_edge_gadget[0] != by_edge_gadget[1]:
                raise InvalidConfigurationError(
                    "matching splits a connector pair between gadgets; "
                    "it does not encode an orientation"
                )
            states.append(by_edge_gadget[0])
        p_by_edge, q_by_edge = states
        if p_by_edge and q_by_edge:
            heads.append(None)  # neutral
        elif p_by_edge:
            heads.append(eg.q_vertex)
        elif q_by_edge:
            heads.append(eg.p_vertex)
        else:
            raise RuntimeError("internal: both-inward edge state in a perfect matching")
    return tuple(heads)


# ---------------------------------------------------------------------------
# gadget self-tests


@dataclass(frozen=True)
class GadgetReport:
    kind: str
    class_counts: dict
    forbidden_empty: bool
    classes_nonempty: bool
    internally_connected: bool
    quotient_ok: bool
    quotient_edges: frozenset

    @property
    def ok(self) -> bool:
        return (
            self.forbidden_empty
            and self.classes_nonempty
            and self.internally_connected
            and self.quotient_ok
        )


def standalone_edge_system() -> tuple[Graph, dict]:
    """Edge gadget plus the two pair edges owned by the endpoint gadgets."""
    names = EDGE_GADGET["vertices"]
    idx = {v: i for i, v in enumerate(names)}
    edges = [(idx[a], idx[b]) for a, b in EDGE_GADGET["edges"]]
    pair_p = (idx["p0"], idx["p1"])
    pair_q = (idx["q0"], idx["q1"])
    edges += [pair_p, pair_q]
    g = Graph(len(names), edges)
    meta = {
        "pair_p": edge(*pair_p),
        "pair_q": edge(*pair_q),
        "orange": [edge(idx[a], idx[b]) for a, b in EDGE_GADGET["orange"]],
        "index": idx,
    }
    return g, meta


def standalone_vertex_system(kind: str) -> tuple[Graph, dict]:
    """AND/OR gadget with a full edge gadget hanging off each slot and a
    far pair edge closing each of them."""
    gadget = VERTEX_GADGETS[kind]
    names = gadget["vertices"]
    nxt = 0
    loc = {}
    for v in names:
        loc[v] = nxt
        nxt += 1
    edges = [(loc[a], loc[b]) for a, b in gadget["edges"]]
    vertex_edges = set(edge(loc[a], loc[b]) for a, b in gadget["edges"])
    orange = [edge(loc[a], loc[b]) for a, b in gadget["orange"]]
    slot_pairs = {}
    for slot, (x, y) in gadget["pairs"].items():
        slot_pairs[slot] = (loc[x], loc[y])
    for slot in ("a", "b", "c"):
        sub = {}
        for v in ("m0", "m1", "m2", "m3", "q0", "q1"):
            sub[v] = nxt
            nxt += 1
        sub["p0"], sub["p1"] = slot_pairs[slot]
        edges += [(sub[a], sub[b]) for a, b in EDGE_GADGET["edges"]]
        orange += [edge(sub[a], sub[b]) for a, b in EDGE_GADGET["orange"]]
        edges.append((sub["q0"], sub["q1"]))  # far pair edge
    g = Graph(nxt, edges)
    return g, {
        "vertex_edges": frozenset(vertex_edges),
        "slot_pairs": slot_pairs,
        "orange": orange,
    }


def _flip_components(g: Graph, matchings: list[frozenset[Edge]]) -> list[int]:
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
            for nb in space.flip_neighbor_masks(masks[v]):
                j = ids.get(nb)
                if j is not None and comp[j] < 0:
                    comp[j] = cid
                    q.append(j)
        cid += 1
    return comp


def _quotient_edges(g: Graph, matchings, classes) -> frozenset:
    space = MaskSpace(g)
    ids = {space.to_mask(m): i for i, m in enumerate(matchings)}
    out = set()
    for i, m in enumerate(matchings):
        for nb in space.flip_neighbor_masks(space.to_mask(m)):
            j = ids.get(nb)
            if j is not None and classes[i] != classes[j]:
                out.add(frozenset((classes[i], classes[j])))
    return frozenset(out)


def gadget_selftest(kind: str) -> GadgetReport:
    """Enumerate all perfect matchings of the standalone gadget system,
    classify them by orientation, and check the three behavioral
    properties against the legal orientation transitions."""
    from .oracle import enumerate_matchings

    if kind == "edge":
        g, meta = standalone_edge_system()
        pms = enumerate_matchings(g, "perfect")
        classes = []
        for m in pms:
            pv, qv = meta["pair_p"] in m, meta["pair_q"] in m
            classes.append(
                "toward_p" if pv and not qv
                else "toward_q" if qv and not pv
                else "neutral" if not pv and not qv
                else "forbidden"
            )
        valid = ("toward_p", "toward_q", "neutral")
        expected_quotient = frozenset(
            {frozenset(("toward_p", "neutral")), frozenset(("toward_q", "neutral"))}
        )
    else:
        g, meta = standalone_vertex_system(kind)
        vertex_edges = meta["vertex_edges"]
        pms = enumerate_matchings(g, "perfect")
        classes = []
        for m in pms:
            cov = {}
            for e in m:
                cov[e[0]] = e
                cov[e[1]] = e
            inward = []
            for slot, (x, y) in meta["slot_pairs"].items():
                by_vg = (cov[x] in vertex_edges, cov[y] in vertex_edges)
                if by_vg[0] != by_vg[1]:
                    raise RuntimeError("internal: split pair coverage")
                if by_vg[0]:
                    inward.append(slot)
            classes.append(frozenset(inward))
        valid = tuple(_valid_inward_sets(kind))
        expected_quotient = frozenset(
            frozenset((s, t))
            for s in valid
            for t in valid
            if len(s ^ t) == 1
        )
    counts: dict = {}
    for c in classes:
        counts[c] = counts.get(c, 0) + 1
    forbidden_empty = all(c in valid for c in classes)
    classes_nonempty = all(counts.get(c, 0) > 0 for c in valid)
    comp = _flip_components(g, pms)
    internally_connected = True
    for cls in set(classes):
        members = [i for i, c in enumerate(classes) if c == cls]
        sub = [pms[i] for i in members]
        sub_comp = _flip_components(g, sub)
        if len(set(sub_comp)) > 1:
            internally_connected = False
    quotient = _quotient_edges(g, pms, classes)
    return GadgetReport(
        kind=kind,
        class_counts=counts,
        forbidden_empty=forbidden_empty,
        classes_nonempty=classes_nonempty,
        internally_connected=internally_connected,
        quotient_ok=quotient == expected_quotient,
        quotient_edges=quotient,
    )


# ---------------------------------------------------------------------------
# derived instance transformations


def split_completion(g: Graph, side: Iterable[int]) -> Graph:
    """Complete one side of a balanced bipartition into a clique; the new
    edges can never sit in a perfect matching, so the matching set is
    unchanged."""
    side = frozenset(side)
    for u, v in g.edges:
        if (u in side) == (v in side):
            raise NotBipartiteError(f"edge ({u}, {v}) does not cross the bipartition")
    if 2 * len(side) != g.n:
        raise UnbalancedSidesError(
            f"side has {len(side)} of {g.n} vertices; need exactly half"
        )
    new_edges = list(g.edges)
    for u, v in itertools.combinations(sorted(side), 2):
        new_edges.append((u, v))
    return Graph(g.n, new_edges)


@dataclass(frozen=True)
class KFactorInstance:
    graph: Graph
    h_ini: frozenset[Edge]
    h_tar: frozenset[Edge]
    new_vertices: tuple[int, ...]


def k_factor_instance(
    g: Graph, m_ini: frozenset[Edge], m_tar: frozenset[Edge], k: int
) -> KFactorInstance:
    """Lift two perfect matchings to k-factors whose flip graph mirrors
    the matchings' flip graph exactly.

    Original vertices are paired up; between each pair hangs a complete
    bipartite K_{k-1,k-1} of new vertices with spokes into the pair.  All
    new vertices end up with total degree exactly k, so every k-factor
    contains all gadget edges, leaves each original vertex needing one
    matching edge, and no 4-cycle through a gadget ever alternates."""
    if k < 2:
        raise KTooSmallError("k-factor lift needs k >= 2")
    for m in (m_ini, m_tar):
        if matching_status(g, m).kind != "perfect":
            raise NotPerfectError("both matchings must be perfect")
    pairs = [(2 * i, 2 * i + 1) for i in range(g.n // 2)]
    edges = list(g.edges)
    nxt = g.n
    forced: set[Edge] = set()
    new_vertices = []
    for x, y in pairs:
        a_block = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        b_block = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        new_vertices.extend(a_block + b_block)
        for a in a_block:
            edges.append((x, a))
            forced.add(edge(x, a))
            for b in b_block:
                edges.append((a, b))
                forced.add(edge(a, b))
        for b in b_block:
            edges.append((y, b))
            forced.add(edge(y, b))
    graph = Graph(nxt, edges)
    return KFactorInstance(
        graph,
        frozenset(m_ini) | forced,
        frozenset(m_tar) | forced,
        tuple(new_vertices),
    )


def enumerate_k_factors(g: Graph, k: int, budget: int = 200_000) -> list[frozenset[Edge]]:
    """All spanning subgraphs with every degree exactly k (test-scale)."""
    edges = g.sorted_edges()
    remaining = [g.degree(v) for v in range(g.n)]
    deg = [0] * g.n
    out: list[frozenset[Edge]] = []
    cur: list[Edge] = []

    def rec(i: int):
        if len(out) > budget:
            raise BudgetExceededError("too many k-factors")
        if i == len(edges):
            if all(d == k for d in deg):
                out.append(frozenset(cur))
            return
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        # skip the edge
        if deg[u] + remaining[u] >= k and deg[v] + remaining[v] >= k:
            rec(i + 1)
        # take the edge
        if deg[u] < k and deg[v] < k:
            deg[u] += 1
            deg[v] += 1
            cur.append(edges[i])
            rec(i + 1)
            cur.pop()
            deg[u] -= 1
            deg[v] -= 1
        remaining[u] += 1
        remaining[v] += 1

    if g.n == 0:
        return [frozenset()]
    rec(0)
    return out


def kfactor_flip_components(g: Graph, subgraphs: list[frozenset[Edge]]) -> list[int]:
    """Connected components of edge subsets under alternating-4-cycle
    exchanges (flip semantics shared with matchings)."""
    return _flip_components(g, subgraphs)


def subdivide_edges(
    g: Graph, targets: Sequence[Edge], k: int, matchings: Sequence[frozenset[Edge]]
) -> tuple[Graph, list[frozenset[Edge]], dict]:
    """Replace each target edge by a path on k-3 edges, rewriting the given
    matchings along the paths (alternation is forced either way)."""
    if k % 2 != 0:
        raise KOddError(f"k must be even, got {k}")
    if k < 4:
        raise KTooSmallError(f"k must be >= 4, got {k}")
    targets = [edge(*t) for t in targets]
    if k == 4:
        return g, [frozenset(m) for m in matchings], {}
    edges = [e for e in g.sorted_edges() if e not in set(targets)]
    nxt = g.n
    path_map: dict[Edge, tuple[int, ...]] = {}
    for x, y in sorted(targets):
        inner = list(range(nxt, nxt + k - 4))
        nxt += k - 4
        path = [x] + inner + [y]
        path_map[(x, y)] = tuple(path)
        for i in range(len(path) - 1):
            edges.append((path[i], path[i + 1]))
    new_g = Graph(nxt, edges)
    new_ms = []
    for m in matchings:
        out = set()
        for e in m:
            if e in path_map:
                path = path_map[e]
                for i in range(0, len(path) - 1, 2):
                    out.add(edge(path[i], path[i + 1]))
            else:
                out.add(e)
        for e, path in path_map.items():
            if e not in m:
                for i in range(1, len(path) - 1, 2):
                    out.add(edge(path[i], path[i + 1]))
        new_ms.append(frozenset(out))
    return new_g, new_ms, path_map


def subdivide_for_kflip(inst: GadgetInstance, k: int) -> GadgetInstance:
    """Stretch every subdividable gadget edge to a path on k-3 edges so
    only k-cycles through single gadgets stay flippable; k = 4 is the
    identity.  Per-gadget perfect matching counts are unchanged."""
    if k % 2 != 0:
        raise KOddError(f"k must be even, got {k}")
    if k < 4:
        raise KTooSmallError(f"k must be >= 4, got {k}")
    if inst.subdivision:
        raise InvalidConfigurationError("instance is already subdivided")
    if k == 4:
        return inst
    new_g, (mi, mt), path_map = subdivide_edges(
        inst.graph, inst.orange_edges, k, [inst.m_ini, inst.m_tar]
    )
    new_orange = tuple(
        sorted(
            edge(path[i], path[i + 1])
            for path in path_map.values()
            for i in range(len(path) - 1)
        )
    )
    return GadgetInstance(
        graph=new_g,
        m_ini=mi,
        m_tar=mt,
        machine=inst.machine,
        vertex_gadgets=inst.vertex_gadgets,
        edge_gadgets=inst.edge_gadgets,
        connector_pairs=inst.connector_pairs,
        orange_edges=new_orange,
        k=k,
        subdivision=path_map,
    )


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A 2-coloring certificate, or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    q.append(w)
                elif color[w] == color[v]:
                    return None
    zero = frozenset(v for v in range(g.n) if color[v] == 0)
    return zero, frozenset(range(g.n)) - zero
