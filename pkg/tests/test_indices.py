import math
from fractions import Fraction

import networkx as nx
import pytest

import oracle
from hexderived.constructions import Family, build_family
from hexderived.graph import Graph
from hexderived.indices import (
    INDICES,
    IndexDomainError,
    class_sum_index,
    compute_all,
    compute_by_classes,
    edge_sum_index,
    format_number,
    get_index,
    randic,
)
from hexderived.partitions import degree_partition

OCTAHEDRON = build_family(Family.THDN3, 2)


@pytest.mark.parametrize(
    "name, value",
    [
        ("F", 384),
        ("R_-1/2", 3),
        ("J", Fraction(9, 2)),
        ("ReZG1", 24),
        ("ReZG2", 6),
        ("ReZG3", 1536),
        ("GA5", 12),
        ("H", 3),
        ("M1", 96),
        ("M2", 192),
        ("GA", 12),
    ],
)
def test_octahedron_values(name, value):
    assert edge_sum_index(OCTAHEDRON, name).value == pytest.approx(value, abs=1e-12)


@pytest.mark.parametrize(
    "name, value",
    [("ABC4", 3 * math.sqrt(30) / 4), ("ABC", 3 * math.sqrt(6)), ("AZI", 12 * (8 / 3) ** 3)],
)
def test_octahedron_irrational(name, value):
    assert float(edge_sum_index(OCTAHEDRON, name).value) == pytest.approx(value, abs=1e-12)


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("r", [3, 5])
def test_exact_indices_match_oracle(family, r):
    g = build_family(family, r)
    ref = oracle.family(family.value, r)
    for name in ("F", "ReZG1", "ReZG2", "ReZG3", "M1", "M2", "H", "R_-1", "R_1"):
        assert edge_sum_index(g, name).value == oracle.exact_index(ref, name), name


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("r", [3, 5])
def test_float_indices_match_oracle(family, r):
    g = build_family(family, r)
    ref = oracle.family(family.value, r)
    for name in ("R_-1/2", "R_1/2", "J", "ABC", "GA", "AZI", "ABC4", "GA5"):
        assert edge_sum_index(g, name).value == pytest.approx(oracle.float_index(ref, name), rel=1e-12), name


def test_spot_values():
    assert edge_sum_index(build_family(Family.HDN3, 4), "F").value == 135234
    assert edge_sum_index(build_family(Family.THDN3, 4), "ReZG2").value == 37


@pytest.mark.parametrize("family", list(Family))
def test_class_route_equals_edge_route(family):
    g = build_family(family, 6)
    edge, cls = compute_all(g), compute_by_classes(g)
    for name in INDICES:
        if INDICES[name].exact:
            assert edge[name].value == cls[name].value
        else:
            assert edge[name].value == pytest.approx(cls[name].value, rel=1e-12)


def test_reverse_and_parallel_agree():
    g = build_family(Family.HDN3, 8)
    for name in ("J", "ABC4", "GA5", "AZI"):
        base = edge_sum_index(g, name).value
        assert edge_sum_index(g, name, reverse=True).value == pytest.approx(base, rel=1e-12)
        assert edge_sum_index(g, name, parallel=True).value == pytest.approx(base, rel=1e-12)


def test_randic_alpha():
    assert randic(OCTAHEDRON, 1).value == 192
    assert randic(OCTAHEDRON, -1).value == Fraction(12, 16)
    assert randic(OCTAHEDRON, "1/2").value == pytest.approx(48)
    assert randic(OCTAHEDRON, 0.25).value == pytest.approx(12 * 16**0.25)


def test_domain_errors_name_edge():
    k2 = Graph([0, 1], [(0, 1)])
    with pytest.raises(IndexDomainError, match="AZI undefined on edge 0 -- 1"):
        edge_sum_index(k2, "AZI")
    two_k2 = Graph([0, 1, 2, 3], [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="Balaban"):
        edge_sum_index(two_k2, "J")


def test_lookup_case_insensitive():
    assert get_index("rezg3").name == "ReZG3"
    assert get_index("forgotten").name == "F"
    with pytest.raises(KeyError):
        get_index("nope")


def test_class_sum_needs_summary_for_balaban():
    with pytest.raises(ValueError):
        class_sum_index(degree_partition(OCTAHEDRON), "J")


def test_matches_networkx_randic():
    g = build_family(Family.RHDN3, 4)
    h = nx.Graph(g.edge_list())
    deg = dict(h.degree())
    ref = math.fsum((deg[u] * deg[v]) ** -0.5 for u, v in h.edges())
    assert float(edge_sum_index(g, "R_-1/2").value) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize(
    "value, text",
    [(Fraction(3), "3"), (Fraction(7, 2), "7/2"), (1.0 / 3.0, "0.333333333333"), (12, "12")],
)
def test_format_number(value, text):
    assert format_number(value) == text
