"""Serialisation of generated graphs.

Edge-list text::

    # family=HDN3 r=4 n=199 m=576
    0 1
    0 2
    ...

Labels are positions in the canonical vertex order, so output is stable
across runs. The JSON form additionally records each vertex's structural
identity.
"""

from __future__ import annotations

import json
import re
from typing import Any

import numpy as np

from .graph import FaceKey, Graph, GraphError, LatticeCoord, Orientation, VertexId, VertexKind

__all__ = [
    "FormatError",
    "graph_to_json",
    "read_edge_list",
    "read_json",
    "vertex_record",
    "write_edge_list",
]

_HEADER = re.compile(r"#\s*family=(\S+)\s+r=(-?\d+)\s+n=(\d+)\s+m=(\d+)\s*")


class FormatError(ValueError):
    pass


def write_edge_list(g: Graph, family: str, r: int) -> str:
    lines = [f"# family={family} r={r} n={g.n} m={g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.index_edges.tolist())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> tuple[Graph, dict[str, Any]]:
    """Parse edge-list text back into a graph on labels ``0 .. n-1``.

    Returns the graph and the header fields. The header's ``m`` must agree
    with the number of edge lines.
    """
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty edge list")
    head = _HEADER.fullmatch(lines[0])
    if head is None:
        raise FormatError(f"bad header line: {lines[0]!r}")
    meta = {"family": head.group(1), "r": int(head.group(2)), "n": int(head.group(3)), "m": int(head.group(4))}
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer label in {line!r}") from None
    if len(pairs) != meta["m"]:
        raise FormatError(f"header says m={meta['m']} but {len(pairs)} edges follow")
    try:
        g = Graph.from_index_edges(list(range(meta["n"])), np.array(pairs, dtype=np.int64).reshape(-1, 2))
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    return g, meta


def vertex_record(label: int, v) -> dict[str, Any]:
    if not isinstance(v, VertexId):
        return {"id": label, "kind": "plain", "key": v}
    if v.kind == VertexKind.MESH:
        return {"id": label, "kind": "mesh", "coord": [v.a, v.b]}
    return {
        "id": label,
        "kind": "face",
        "face": {"anchor": [v.a, v.b], "orientation": Orientation(v.orientation).name.lower(), "slot": v.slot},
    }


def graph_to_json(g: Graph, family: str, r: int) -> str:
    doc = {
        "family": family,
        "r": r,
        "n": g.n,
        "m": g.m,
        "vertices": [vertex_record(i, v) for i, v in enumerate(g.vertices)],
        "edges": g.index_edges.tolist(),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _vertex_from_record(rec: dict) -> VertexId:
    kind = rec.get("kind")
    if kind == "mesh":
        return VertexId.mesh(tuple(rec["coord"]))
    if kind == "face":
        f = rec["face"]
        face = FaceKey(LatticeCoord(*f["anchor"]), Orientation[f["orientation"].upper()])
        return VertexId.face_vertex(face, f["slot"])
    raise FormatError(f"unknown vertex kind {kind!r}")


def read_json(text: str) -> tuple[Graph, dict[str, Any]]:
    doc = json.loads(text)
    try:
        records = sorted(doc["vertices"], key=lambda rec: rec["id"])
        ids = [_vertex_from_record(rec) for rec in records]
        if [rec["id"] for rec in records] != list(range(len(records))):
            raise FormatError("vertex ids must be 0 .. n-1")
        g = Graph.from_index_edges(ids, np.array(doc["edges"], dtype=np.int64).reshape(-1, 2))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph JSON: {exc}") from None
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if (g.n, g.m) != (doc["n"], doc["m"]):
        raise FormatError("n/m in document do not match vertex and edge arrays")
    return g, {k: doc[k] for k in ("family", "r", "n", "m")}
