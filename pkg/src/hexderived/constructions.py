"""Base lattice meshes and the octahedral face substitution that turns them
into third-type hex-derived networks.

Three regions of the triangular lattice are supported:

* the hexagonal mesh ``HX(n)``, all points within cube distance ``n - 1``
  of the origin;
* a triangle with ``r`` lattice points per side;
* an ``r x r`` rhombus.

Replacing every unit triangle by a planar octahedron yields HDN3, THDN3 and
RHDN3 respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .graph import FaceKey, Graph, LatticeCoord, Orientation, VertexId, VertexKind

__all__ = [
    "ConstructionError",
    "Family",
    "FamilyParam",
    "build_family",
    "build_hx",
    "build_rhombus_mesh",
    "build_triangular_mesh",
    "enumerate_faces",
    "face_vertices",
    "lattice_mesh",
    "octahedral_substitution",
]


class ConstructionError(ValueError):
    pass


class Family(str, Enum):
    HDN3 = "HDN3"
    THDN3 = "THDN3"
    RHDN3 = "RHDN3"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, Family):
            return name
        key = str(name).strip().upper()
        try:
            return cls(key)
        except ValueError:
            known = ", ".join(f.value for f in cls)
            raise ConstructionError(f"unknown family {name!r} (known: {known})") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilyParam:
    family: Family
    r: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if isinstance(self.r, bool) or not isinstance(self.r, (int, np.integer)):
            raise ConstructionError(f"dimension must be an integer, got {self.r!r}")
        object.__setattr__(self, "r", int(self.r))


def lattice_mesh(coords) -> Graph:
    """Graph on the given axial coordinates joined along the six lattice directions."""
    pts = sorted(set(LatticeCoord(*c) for c in coords))
    present = set(pts)
    edges = []
    for a, b in pts:
        # forward half of the directions so every edge is produced once
        for da, db in ((1, 0), (0, 1), (1, -1)):
            q = (a + da, b + db)
            if q in present:
                edges.append((VertexId.mesh((a, b)), VertexId.mesh(q)))
    return Graph([VertexId.mesh(p) for p in pts], edges)


def _check_dim(value, minimum: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ConstructionError(f"{what} must be an integer, got {value!r}")
    if value < minimum:
        raise ConstructionError(f"{what} must be >= {minimum}, got {value}")
    return int(value)


def build_hx(n: int) -> Graph:
    """Hexagonal mesh ``HX(n)`` with ``3n^2 - 3n + 1`` vertices."""
    if isinstance(n, (int, np.integer)) and not isinstance(n, bool) and n <= 1:
        raise ConstructionError(f"HX({n}) does not exist: a hexagonal mesh needs dimension >= 2")
    n = _check_dim(n, 2, "HX dimension")
    k = n - 1
    coords = [
        (a, b)
        for a in range(-k, k + 1)
        for b in range(-k, k + 1)
        if abs(a + b) <= k
    ]
    return lattice_mesh(coords)


def build_triangular_mesh(r: int) -> Graph:
    """Triangular region with ``r`` points per side, ``r(r+1)/2`` vertices."""
    r = _check_dim(r, 2, "triangular mesh dimension")
    return lattice_mesh((a, b) for a in range(r) for b in range(r - a))


def build_rhombus_mesh(r: int) -> Graph:
    """Rhombus of ``r x r`` lattice points, split into ``2(r-1)^2`` triangles.

    The short diagonal runs along ``(+1, -1)``, which leaves the obtuse
    corners ``(r-1, 0)`` and ``(0, r-1)`` with three mesh neighbours each.
    """
    r = _check_dim(r, 2, "rhombus mesh dimension")
    return lattice_mesh((a, b) for a in range(r) for b in range(r))


def _mesh_coords(mesh: Graph) -> set[LatticeCoord]:
    coords = set()
    for v in mesh.vertices:
        if not isinstance(v, VertexId) or v.kind != VertexKind.MESH:
            raise ConstructionError(f"not a lattice mesh vertex: {v!r}")
        coords.add(LatticeCoord(v.a, v.b))
    return coords


def enumerate_faces(mesh: Graph) -> list[FaceKey]:
    """All unit triangles whose three corners and three sides lie in ``mesh``."""
    coords = _mesh_coords(mesh)
    # a down face's anchor is not one of its corners, so it may lie outside the mesh
    anchors = {LatticeCoord(a - da, b - db) for a, b in coords for da, db in ((0, 0), (1, 0), (0, 1), (1, 1))}
    faces = []
    for anchor in sorted(anchors):
        for orient in Orientation:
            face = FaceKey(anchor, orient)
            c = face.corners()
            if not all(p in coords for p in c):
                continue
            ids = [VertexId.mesh(p) for p in c]
            if (
                mesh.has_edge(ids[0], ids[1])
                and mesh.has_edge(ids[1], ids[2])
                and mesh.has_edge(ids[0], ids[2])
            ):
                faces.append(face)
    return faces


def face_vertices(face: FaceKey) -> tuple[VertexId, VertexId, VertexId]:
    return tuple(VertexId.face_vertex(face, s) for s in range(3))


def octahedral_substitution(mesh: Graph) -> Graph:
    """Replace every unit triangle of ``mesh`` by a planar octahedron.

    For a face with corners ``c0 < c1 < c2`` three vertices ``f0, f1, f2`` are
    added; they form an inner triangle and ``fi`` is joined to every ``cj``
    with ``j != i``. Each face contributes 3 vertices and 9 edges, and the six
    vertices of a face induce an octahedron in which ``ci`` and ``fi`` are the
    non-adjacent pairs.
    """
    faces = enumerate_faces(mesh)
    if not faces:
        return mesh
    vertices = list(mesh.vertices)
    edges = mesh.edge_list()
    for face in faces:
        corners = sorted(VertexId.mesh(c) for c in face.corners())
        f = face_vertices(face)
        vertices.extend(f)
        edges.append((f[0], f[1]))
        edges.append((f[1], f[2]))
        edges.append((f[0], f[2]))
        for i in range(3):
            for j in range(3):
                if i != j:
                    edges.append((f[i], corners[j]))
    return Graph(vertices, edges)


_BASE_MESH = {
    Family.HDN3: build_hx,
    Family.THDN3: build_triangular_mesh,
    Family.RHDN3: build_rhombus_mesh,
}


def build_family(p: FamilyParam | str | Family, r: int | None = None) -> Graph:
    """Build ``HDN3(r)``, ``THDN3(r)`` or ``RHDN3(r)``.

    Accepts either a :class:`FamilyParam` or ``(family, r)``. Results are
    cached; graphs are immutable, so sharing them is safe.
    """
    if not isinstance(p, FamilyParam):
        if r is None:
            raise TypeError("build_family needs a FamilyParam or (family, r)")
        p = FamilyParam(p, r)
    return _build_cached(p.family, p.r)


@lru_cache(maxsize=32)
def _build_cached(family: Family, r: int) -> Graph:
    return octahedral_substitution(_BASE_MESH[family](r))
