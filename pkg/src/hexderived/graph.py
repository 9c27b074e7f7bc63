"""Immutable undirected simple graphs with degree queries.

Vertices can be any hashable, mutually comparable objects. Generated networks
use :class:`VertexId`, whose natural ordering puts mesh vertices before face
vertices, so the canonical vertex and edge order falls out of plain sorting.
"""

from __future__ import annotations

from collections import Counter
from enum import IntEnum
from typing import Hashable, Iterable, Iterator, NamedTuple

import numpy as np

__all__ = [
    "Direction",
    "FaceKey",
    "Graph",
    "GraphError",
    "GraphSummary",
    "LatticeCoord",
    "Orientation",
    "VertexId",
    "VertexKind",
    "VertexNotFoundError",
]

# axial offsets of the six triangular-lattice neighbours
Direction = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class GraphError(ValueError):
    """Raised when a vertex/edge set does not describe a simple graph."""


class VertexNotFoundError(KeyError):
    def __str__(self) -> str:
        return f"vertex not in graph: {self.args[0]!r}"


class LatticeCoord(NamedTuple):
    """Axial coordinate on the triangular lattice (cube coordinate c = -a-b)."""

    a: int
    b: int

    def neighbors(self) -> list[LatticeCoord]:
        return [LatticeCoord(self.a + da, self.b + db) for da, db in Direction]


class Orientation(IntEnum):
    UP = 0
    DOWN = 1


class FaceKey(NamedTuple):
    """A unit triangle of the lattice, identified by anchor and orientation.

    Up faces have corners (a,b), (a+1,b), (a,b+1); down faces have corners
    (a+1,b), (a,b+1), (a+1,b+1).
    """

    anchor: LatticeCoord
    orientation: Orientation

    def corners(self) -> tuple[LatticeCoord, LatticeCoord, LatticeCoord]:
        a, b = self.anchor
        if self.orientation is Orientation.UP:
            return LatticeCoord(a, b), LatticeCoord(a + 1, b), LatticeCoord(a, b + 1)
        return LatticeCoord(a + 1, b), LatticeCoord(a, b + 1), LatticeCoord(a + 1, b + 1)


class VertexKind(IntEnum):
    MESH = 0
    FACE = 1


class VertexId(NamedTuple):
    """Structural vertex identity.

    Stored flat as ``(kind, a, b, orientation, slot)`` so that tuple ordering
    is the canonical order: mesh before face, mesh by ``(a, b)``, face by
    ``(anchor, orientation, slot)``. Mesh vertices carry orientation and slot
    of 0 and never compare equal to a face vertex.
    """

    kind: VertexKind
    a: int
    b: int
    orientation: int = 0
    slot: int = 0

    @classmethod
    def mesh(cls, coord: tuple[int, int]) -> VertexId:
        return cls(VertexKind.MESH, coord[0], coord[1])

    @classmethod
    def face_vertex(cls, face: FaceKey, slot: int) -> VertexId:
        if slot not in (0, 1, 2):
            raise ValueError(f"face slot must be 0, 1 or 2, got {slot}")
        a, b = face.anchor
        return cls(VertexKind.FACE, a, b, int(face.orientation), slot)

    @property
    def coord(self) -> LatticeCoord:
        if self.kind != VertexKind.MESH:
            raise AttributeError("face vertices have no lattice coordinate")
        return LatticeCoord(self.a, self.b)

    @property
    def face(self) -> FaceKey:
        if self.kind != VertexKind.FACE:
            raise AttributeError("mesh vertices have no face")
        return FaceKey(LatticeCoord(self.a, self.b), Orientation(self.orientation))


class GraphSummary(NamedTuple):
    n: int
    m: int


class Graph:
    """Immutable undirected simple graph.

    The vertex list is sorted once at construction and positions in that list
    serve as dense integer labels. Adjacency is held in CSR form with sorted
    neighbour lists; every array is read-only.

    Parameters
    ----------
    vertices : iterable of hashable, comparable objects
    edges : iterable of 2-sequences of vertices

    Raises
    ------
    GraphError
        On self-loops, repeated edges, or edge endpoints missing from
        ``vertices``.
    """

    __slots__ = (
        "_vertices",
        "_index",
        "_edges",
        "_indptr",
        "_neighbors",
        "_degrees",
        "_sums",
        "_summary",
    )

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]):
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        try:
            flat = np.fromiter(
                (index[x] for e in edges for x in e), dtype=np.int64
            )
        except KeyError as exc:
            raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
        if flat.size % 2:
            raise GraphError("edges must be pairs")
        self._init_arrays(verts, index, flat.reshape(-1, 2))

    @classmethod
    def from_index_edges(cls, vertices: list, edges: np.ndarray) -> Graph:
        """Build from an already-sorted, duplicate-free vertex list and an
        ``(m, 2)`` array of positions into it."""
        if any(vertices[i] >= vertices[i + 1] for i in range(len(vertices) - 1)):
            raise GraphError("vertices must be strictly increasing")
        g = cls.__new__(cls)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= len(vertices)):
            raise GraphError("edge index out of range")
        g._init_arrays(list(vertices), {v: i for i, v in enumerate(vertices)}, edges)
        return g

    def _init_arrays(self, verts: list, index: dict, pairs: np.ndarray) -> None:
        n = len(verts)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.any(lo == hi):
            i = int(lo[np.argmax(lo == hi)])
            raise GraphError(f"self-loop at {verts[i]!r}")
        order = np.lexsort((hi, lo))
        lo, hi = lo[order], hi[order]
        dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
        if np.any(dup):
            k = int(np.argmax(dup))
            raise GraphError(f"parallel edge {verts[lo[k]]!r} -- {verts[hi[k]]!r}")
        edges = np.stack([lo, hi], axis=1)

        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        degrees = np.bincount(src, minlength=n).astype(np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        sums = np.zeros(n, dtype=np.int64)
        np.add.at(sums, src, degrees[dst])

        for arr in (edges, indptr, dst, degrees, sums):
            arr.flags.writeable = False
        self._vertices = tuple(verts)
        self._index = index
        self._edges = edges
        self._indptr = indptr
        self._neighbors = dst
        self._degrees = degrees
        self._sums = sums
        self._summary = GraphSummary(n, len(edges))

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def summary(self) -> GraphSummary:
        return self._summary

    @property
    def n(self) -> int:
        return self._summary.n

    @property
    def m(self) -> int:
        return self._summary.m

    def __len__(self) -> int:
        return self._summary.n

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and np.array_equal(self._edges, other._edges)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def index_of(self, v: Hashable) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise VertexNotFoundError(v) from None

    def neighbors(self, v: Hashable) -> tuple:
        i = self.index_of(v)
        nbrs = self._neighbors[self._indptr[i] : self._indptr[i + 1]]
        return tuple(self._vertices[j] for j in nbrs)

    def degree(self, v: Hashable) -> int:
        return int(self._degrees[self.index_of(v)])

    def neighbor_degree_sum(self, v: Hashable) -> int:
        """Sum of the degrees of the neighbours of ``v``."""
        return int(self._sums[self.index_of(v)])

    def has_edge(self, u: Hashable, v: Hashable) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        row = self._neighbors[self._indptr[i] : self._indptr[i + 1]]
        k = np.searchsorted(row, j)
        return bool(k < len(row) and row[k] == j)

    # -- bulk views --------------------------------------------------------

    @property
    def index_edges(self) -> np.ndarray:
        """Read-only ``(m, 2)`` array of dense labels, rows sorted, ``u < v``."""
        return self._edges

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def neighbor_degree_sums(self) -> np.ndarray:
        return self._sums

    def edge_list(self) -> list[tuple]:
        """Every edge once, endpoints in canonical order, sorted."""
        vs = self._vertices
        return [(vs[u], vs[v]) for u, v in self._edges.tolist()]

    def iter_edges(self) -> Iterator[tuple]:
        vs = self._vertices
        for u, v in self._edges.tolist():
            yield vs[u], vs[v]

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self._degrees.tolist()).items()))

    def subgraph_without(self, removed: Iterable[Hashable]) -> Graph:
        """Copy with the given vertices and their incident edges deleted."""
        drop = set(removed)
        keep = [v for v in self._vertices if v not in drop]
        return Graph(keep, [(u, v) for u, v in self.iter_edges() if u not in drop and v not in drop])
