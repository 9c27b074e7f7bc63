"""Property-based checks on construction invariants and the index engine."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hexderived.constructions import Family, build_family, enumerate_faces, lattice_mesh, octahedral_substitution
from hexderived.graph import Graph, VertexId, VertexKind
from hexderived.indices import INDICES, compute_all, compute_by_classes, edge_sum_index
from hexderived.partitions import degree_partition, sum_partition
from hexderived.polynomial import Poly

families = st.sampled_from(list(Family))
dims = st.integers(min_value=2, max_value=9)


@settings(max_examples=30, deadline=None)
@given(families, dims)
def test_handshake_and_degree_set(family, r):
    g = build_family(family, r)
    assert int(g.degrees.sum()) == 2 * g.m
    assert set(g.degree_histogram()) <= {4, 7, 10, 13, 16, 18}
    assert degree_partition(g).total == sum_partition(g).total == g.m


@settings(max_examples=30, deadline=None)
@given(families, st.integers(min_value=2, max_value=6))
def test_degrees_follow_mesh(family, r):
    # a mesh vertex gains two edges per incident face; face vertices have degree 4
    g = build_family(family, r)
    mesh = lattice_mesh([v.coord for v in g.vertices if v.kind == VertexKind.MESH])
    incident = {}
    for f in enumerate_faces(mesh):
        for c in f.corners():
            incident[c] = incident.get(c, 0) + 1
    for v in g.vertices:
        if v.kind == VertexKind.MESH:
            assert g.degree(v) == mesh.degree(v) + 2 * incident.get(v.coord, 0)
        else:
            assert g.degree(v) == 4


@st.composite
def lattice_patches(draw):
    pts = draw(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=2, max_size=18))
    return sorted(pts)


@settings(max_examples=60, deadline=None)
@given(lattice_patches())
def test_substitution_counts_on_random_patches(points):
    mesh = lattice_mesh(points)
    faces = enumerate_faces(mesh)
    g = octahedral_substitution(mesh)
    assert g.n == mesh.n + 3 * len(faces)
    assert g.m == mesh.m + 9 * len(faces)
    for f in faces:
        a, b, c = (VertexId.mesh(x) for x in f.corners())
        assert mesh.has_edge(a, b) and mesh.has_edge(b, c) and mesh.has_edge(a, c)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    return Graph(range(n), edges)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_class_route_equals_edge_route(g):
    names = [n for n in INDICES if n not in ("J", "AZI")]
    edge, cls = compute_all(g, names), compute_by_classes(g, names)
    for n in names:
        if INDICES[n].exact:
            assert edge[n].value == cls[n].value
        else:
            assert abs(edge[n].value - cls[n].value) <= 1e-9 * max(1.0, abs(edge[n].value))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_reverse_order_invariant(g):
    for n in ("F", "ReZG1", "GA5", "ABC4", "R_1/2"):
        a = edge_sum_index(g, n).value
        b = edge_sum_index(g, n, reverse=True).value
        assert a == b if isinstance(a, Fraction) else abs(a - b) <= 1e-9 * max(1.0, abs(a))


@given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=4), st.integers(-20, 20))
def test_poly_evaluation(coeffs, x):
    p = Poly(coeffs)
    assert p(x) == sum(c * x**i for i, c in enumerate(coeffs))
    assert Poly.parse(str(p)) == p
