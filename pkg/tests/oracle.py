"""Independent reference implementations used only by the tests.

Nothing here imports the package. Meshes are built from Cartesian points of
the triangular lattice, faces are the 3-cliques of the mesh, and indices
are summed edge by edge in plain Python.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx

SQ3 = math.sqrt(3)


def _cart(a, b):
    return (a + b / 2, b * SQ3 / 2)


def _mesh_from_points(points):
    g = nx.Graph()
    pts = {p: _cart(*p) for p in points}
    g.add_nodes_from(pts)
    for p, q in itertools.combinations(pts, 2):
        (x1, y1), (x2, y2) = pts[p], pts[q]
        if abs(math.hypot(x1 - x2, y1 - y2) - 1) < 1e-9:
            g.add_edge(p, q)
    return g


def hex_mesh(n):
    k = n - 1
    return _mesh_from_points([(a, b) for a in range(-k, k + 1) for b in range(-k, k + 1) if abs(a + b) <= k])


def tri_mesh(r):
    return _mesh_from_points([(a, b) for a in range(r) for b in range(r) if a + b <= r - 1])


def rhombus_mesh(r):
    return _mesh_from_points([(a, b) for a in range(r) for b in range(r)])


def substitute(mesh):
    """Replace every triangle of the mesh by a planar octahedron."""
    g = mesh.copy()
    for t, tri in enumerate(c for c in nx.enumerate_all_cliques(mesh) if len(c) == 3):
        inner = [("f", t, i) for i in range(3)]
        g.add_edges_from(itertools.combinations(inner, 2))
        for i, fi in enumerate(inner):
            for j, c in enumerate(sorted(tri)):
                if i != j:
                    g.add_edge(fi, c)
    return g


MESHES = {"HDN3": hex_mesh, "THDN3": tri_mesh, "RHDN3": rhombus_mesh}


def family(name, r):
    return substitute(MESHES[name](r))


def degree_pairs(g):
    return [tuple(sorted((g.degree(u), g.degree(v)))) for u, v in g.edges()]


def sum_pairs(g):
    s = {v: sum(g.degree(w) for w in g[v]) for v in g}
    return [tuple(sorted((s[u], s[v]))) for u, v in g.edges()]


def exact_index(g, name):
    """Rational-valued indices as Fractions."""
    total = Fraction(0)
    for x, y in degree_pairs(g):
        total += {
            "F": lambda: Fraction(x * x + y * y),
            "ReZG1": lambda: Fraction(x * y, x + y),
            "ReZG2": lambda: Fraction(x + y, x * y),
            "ReZG3": lambda: Fraction(x * y * (x + y)),
            "M1": lambda: Fraction(x + y),
            "M2": lambda: Fraction(x * y),
            "H": lambda: Fraction(2, x + y),
            "R_-1": lambda: Fraction(1, x * y),
            "R_1": lambda: Fraction(x * y),
        }[name]()
    return total


def float_index(g, name):
    if name in ("ABC4", "GA5"):
        pairs = sum_pairs(g)
    else:
        pairs = degree_pairs(g)
    terms = []
    for x, y in pairs:
        if name in ("R_-1/2", "J"):
            terms.append(1 / math.sqrt(x * y))
        elif name == "R_1/2":
            terms.append(math.sqrt(x * y))
        elif name in ("ABC", "ABC4"):
            terms.append(math.sqrt((x + y - 2) / (x * y)))
        elif name in ("GA", "GA5"):
            terms.append(2 * math.sqrt(x * y) / (x + y))
        elif name == "AZI":
            terms.append((x * y / (x + y - 2)) ** 3)
        else:
            raise KeyError(name)
    total = math.fsum(terms)
    if name == "J":
        m, n = g.number_of_edges(), g.number_of_nodes()
        total *= m / (m - n + 2)
    return total
