"""Instance / sequence / NCL-machine JSON formats.

Instance files carry a graph, two matchings and optional solver hints::

    {"n": 6, "edges": [[0,1], ...], "m_ini": [[0,1], ...],
     "m_tar": [[1,2], ...], "hints": {"strong_order": [...],
     "boundary_order": [...]}}

Vertex labels may be arbitrary integers; they are mapped onto 0..n-1 by
sorted order (the identity when they already are 0..n-1).  Sequence
files::

    {"mode": "flip" | "flip_slide" | "kflip", "k": 6,
     "moves": [{"flip": [a, b, c, d]},
               {"slide": {"remove": [u, v], "add": [v, w]}}]}

NCL machine files::

    {"vertices": [{"id": 0, "type": "and"}, ...],
     "edges": [{"u": 0, "v": 1, "w": 2}, ...],
     "c_ini": [{"edge": 0, "head": 1}, ...], "c_tar": [...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import MalformedInputError, MatchFlipError
from .graph import (
    Edge,
    Flip,
    Graph,
    Move,
    ReconfigSequence,
    Slide,
    canonical_flip,
    edge,
)
from .hardness import NclMachine, validate_machine


@dataclass
class Instance:
    graph: Graph
    m_ini: frozenset[Edge]
    m_tar: frozenset[Edge]
    hints: dict = field(default_factory=dict)
    label_of: tuple = ()  # internal index -> original label

    def to_label(self, v: int):
        return self.label_of[v] if self.label_of else v


def _load_json(source: Union[str, dict]) -> dict:
    if isinstance(source, dict):
        return source
    try:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read JSON from {source}: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedInputError("top-level JSON value must be an object")
    return data


def _label_map(n: int, labels: set) -> dict:
    if not all(isinstance(x, int) for x in labels):
        raise MalformedInputError("vertex labels must be integers")
    if labels and min(labels) >= 0 and max(labels) < n:
        return {x: x for x in range(n)}
    if len(labels) != n:
        raise MalformedInputError(
            f"{len(labels)} distinct labels for n={n}; cannot infer the mapping"
        )
    return {lab: i for i, lab in enumerate(sorted(labels))}


def load_instance(source: Union[str, dict]) -> Instance:
    data = _load_json(source)
    try:
        n = int(data["n"])
        raw_edges = [tuple(e) for e in data["edges"]]
        raw_ini = [tuple(e) for e in data.get("m_ini", [])]
        raw_tar = [tuple(e) for e in data.get("m_tar", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad instance structure: {exc}") from exc
    hints = data.get("hints", {}) or {}
    labels = set()
    for u, v in raw_edges + raw_ini + raw_tar:
        labels.add(u)
        labels.add(v)
    for key in ("strong_order", "boundary_order"):
        for v in hints.get(key, []) or []:
            labels.add(v)
    mapping = _label_map(n, labels)
    try:
        g = Graph(n, [(mapping[u], mapping[v]) for u, v in raw_edges])
    except MatchFlipError as exc:
        raise MalformedInputError(f"bad graph: {exc}") from exc
    m_ini = frozenset(edge(mapping[u], mapping[v]) for u, v in raw_ini)
    m_tar = frozenset(edge(mapping[u], mapping[v]) for u, v in raw_tar)
    mapped_hints = {}
    for key in ("strong_order", "boundary_order"):
        if key in hints and hints[key] is not None:
            mapped_hints[key] = [mapping[v] for v in hints[key]]
    inv = [0] * n
    for lab, i in mapping.items():
        inv[i] = lab
    return Instance(g, m_ini, m_tar, mapped_hints, tuple(inv))


def instance_to_dict(
    graph: Graph,
    m_ini,
    m_tar,
    hints: Optional[dict] = None,
) -> dict:
    out = {
        "n": graph.n,
        "edges": [list(e) for e in graph.sorted_edges()],
        "m_ini": [list(e) for e in sorted(edge(*x) for x in m_ini)],
        "m_tar": [list(e) for e in sorted(edge(*x) for x in m_tar)],
    }
    if hints:
        out["hints"] = {k: list(v) for k, v in sorted(hints.items())}
    return out


def dump_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(data))


def dumps_canonical(data: dict) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def sequence_to_dict(seq: ReconfigSequence) -> dict:
    moves = []
    for mv in seq.moves:
        if isinstance(mv, Flip):
            moves.append({"flip": list(mv.cycle)})
        else:
            moves.append({"slide": {"remove": list(mv.removed), "add": list(mv.added)}})
    out = {"mode": seq.mode, "moves": moves}
    if seq.k is not None:
        out["k"] = seq.k
    return out


def load_sequence(source: Union[str, dict]) -> ReconfigSequence:
    data = _load_json(source)
    try:
        mode = data["mode"]
        k = data.get("k")
        moves: list[Move] = []
        for item in data["moves"]:
            if "flip" in item:
                moves.append(canonical_flip(tuple(item["flip"])))
            elif "slide" in item:
                s = item["slide"]
                moves.append(Slide(tuple(s["remove"]), tuple(s["add"])))
            else:
                raise MalformedInputError(f"unknown move {item!r}")
        return ReconfigSequence(mode, tuple(moves), k)
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError, MatchFlipError) as exc:
        raise MalformedInputError(f"bad sequence structure: {exc}") from exc


def load_ncl(source: Union[str, dict]):
    """Returns (machine, c_ini, c_tar); configurations may be None."""
    data = _load_json(source)
    try:
        vmeta = data["vertices"]
        ids = [int(v["id"]) for v in vmeta]
        mapping = {lab: i for i, lab in enumerate(sorted(ids))}
        if len(mapping) != len(ids):
            raise MalformedInputError("duplicate NCL vertex ids")
        types = [""] * len(ids)
        for v in vmeta:
            types[mapping[int(v["id"])]] = v["type"]
        edges = tuple(
            (mapping[int(e["u"])], mapping[int(e["v"])], int(e["w"]))
            for e in data["edges"]
        )
        machine = NclMachine(tuple(types), edges)
        validate_machine(machine)

        def conf(key):
            if key not in data or data[key] is None:
                return None
            heads = [None] * len(edges)
            for item in data[key]:
                heads[int(item["edge"])] = mapping[int(item["head"])]
            if any(h is None for h in heads):
                raise MalformedInputError(f"{key} does not orient every edge")
            return tuple(heads)

        return machine, conf("c_ini"), conf("c_tar")
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError, IndexError, MatchFlipError) as exc:
        raise MalformedInputError(f"bad NCL machine structure: {exc}") from exc


def ncl_to_dict(machine: NclMachine, c_ini=None, c_tar=None) -> dict:
    out = {
        "vertices": [
            {"id": i, "type": t} for i, t in enumerate(machine.vertex_types)
        ],
        "edges": [{"u": u, "v": v, "w": w} for u, v, w in machine.edges],
    }
    for key, conf in (("c_ini", c_ini), ("c_tar", c_tar)):
        if conf is not None:
            out[key] = [{"edge": i, "head": h} for i, h in enumerate(conf)]
    return out
