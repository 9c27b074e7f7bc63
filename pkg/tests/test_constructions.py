import networkx as nx
import pytest

import oracle
from hexderived.constructions import (
    ConstructionError,
    Family,
    FamilyParam,
    build_family,
    build_hx,
    build_rhombus_mesh,
    build_triangular_mesh,
    enumerate_faces,
    octahedral_substitution,
)
from hexderived.graph import Orientation, VertexKind

COUNTS = {
    Family.HDN3: (lambda r: 21 * r * r - 39 * r + 19, lambda r: 63 * r * r - 123 * r + 60),
    Family.THDN3: (lambda r: (7 * r * r - 11 * r + 6) // 2, lambda r: (21 * r * r - 39 * r + 18) // 2),
    Family.RHDN3: (lambda r: 7 * r * r - 12 * r + 6, lambda r: 21 * r * r - 40 * r + 19),
}


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("r", range(2, 13))
def test_counts(family, r):
    g = build_family(family, r)
    nf, mf = COUNTS[family]
    assert (g.n, g.m) == (nf(r), mf(r))


@pytest.mark.parametrize("n", range(2, 8))
def test_hx_size(n):
    g = build_hx(n)
    assert g.n == 3 * n * n - 3 * n + 1
    assert len(enumerate_faces(g)) == 6 * (n - 1) ** 2


@pytest.mark.parametrize(
    "builder, msg",
    [(build_hx, "does not exist"), (build_triangular_mesh, ">= 2"), (build_rhombus_mesh, ">= 2")],
)
@pytest.mark.parametrize("bad", [1, 0, -3])
def test_small_dimension_rejected(builder, msg, bad):
    with pytest.raises(ConstructionError, match=msg):
        builder(bad)


def test_face_orientation_counts():
    faces = enumerate_faces(build_triangular_mesh(5))
    ups = sum(f.orientation == Orientation.UP for f in faces)
    assert (ups, len(faces) - ups) == (10, 6)


def test_substitution_adds_three_vertices_nine_edges_per_face():
    mesh = build_rhombus_mesh(4)
    faces = enumerate_faces(mesh)
    g = octahedral_substitution(mesh)
    assert g.n == mesh.n + 3 * len(faces)
    assert g.m == mesh.m + 9 * len(faces)


def test_face_vertices_have_degree_four():
    g = build_family(Family.HDN3, 4)
    for v in g.vertices:
        if v.kind == VertexKind.FACE:
            assert g.degree(v) == 4


def test_smallest_triangular_is_octahedron():
    g = build_family(Family.THDN3, 2)
    h = nx.Graph(g.edge_list())
    assert nx.is_isomorphic(h, nx.octahedral_graph())


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("r", [2, 3, 4])
def test_isomorphic_to_geometric_oracle(family, r):
    g = build_family(family, r)
    ours = nx.Graph(g.edge_list())
    ref = oracle.family(family.value, r)
    assert nx.weisfeiler_lehman_graph_hash(ours, iterations=4) == nx.weisfeiler_lehman_graph_hash(ref, iterations=4)
    if r <= 3:
        assert nx.is_isomorphic(ours, ref)


@pytest.mark.parametrize("family", list(Family))
def test_planar(family):
    g = build_family(family, 4)
    assert nx.check_planarity(nx.Graph(g.edge_list()))[0]


def test_family_param_and_parse():
    assert build_family(FamilyParam(Family.RHDN3, 3)) is build_family("rhdn3", 3)
    with pytest.raises(ValueError):
        Family.parse("XDN3")


def test_determinism():
    a = build_family(Family.HDN3, 5)
    b = octahedral_substitution(build_hx(5))
    assert a == b and a.vertices == b.vertices
