"""Degree-based topological indices as sums over edges.

Every index is an :class:`IndexSpec`: a symmetric contribution of the two
endpoint values (degrees, or neighbour-degree sums for ABC4/GA5) summed over
all edges. Rational indices are summed exactly; the rest are summed in
floating point with :func:`math.fsum`, which is correctly rounded and hence
independent of edge order.

Two summation routes exist and are deliberately kept apart:

* :func:`edge_sum_index` walks the edge arrays of a graph (vectorised);
* :func:`class_sum_index` multiplies the counts of an edge partition by a
  scalar contribution evaluated once per class.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Mapping, Union

import numpy as np

from .graph import Graph, GraphSummary
from .partitions import Partition, edge_values, partition
from .tables import Mode

__all__ = [
    "INDICES",
    "IndexDomainError",
    "IndexSpec",
    "IndexValue",
    "abc4",
    "balaban",
    "class_sum_index",
    "compute_all",
    "compute_by_classes",
    "edge_sum_index",
    "extended_indices",
    "forgotten",
    "ga5",
    "get_index",
    "randic",
    "randic_spec",
    "rezg1",
    "rezg2",
    "rezg3",
]

Number = Union[Fraction, float]


class IndexDomainError(ValueError):
    """An index is undefined on the given graph."""


@dataclass(frozen=True)
class IndexSpec:
    """Definition of one edge-additive index.

    ``contribution`` is the scalar per-edge term used for class summation.
    ``kernel`` is its vectorised twin: for exact indices it returns integer
    numerator and denominator arrays, otherwise a float array. ``domain``
    optionally returns a boolean mask of edges where the term is undefined.
    ``balaban_factor`` multiplies the sum by ``m / (m - n + 2)``.
    """

    name: str
    basis: Mode
    exact: bool
    contribution: Callable[[int, int], Number]
    kernel: Callable[[np.ndarray, np.ndarray], object]
    description: str = ""
    domain: Callable[[np.ndarray, np.ndarray], np.ndarray] | None = None
    balaban_factor: bool = False
    alpha: Fraction | None = None


@dataclass(frozen=True)
class IndexValue:
    name: str
    value: Number
    basis: Mode = Mode.DEGREE
    family: str | None = None
    r: int | None = None

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def __float__(self) -> float:
        return float(self.value)

    def formatted(self) -> str:
        return format_number(self.value)


def format_number(value: Number) -> str:
    """Integers and fractions verbatim, floats with 12 significant digits."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


# -- exact and floating reductions ----------------------------------------

_INT64_SAFE = 2**62


def _exact_sum(num: np.ndarray, den: np.ndarray) -> Fraction:
    """Exact value of sum(num / den) over integer arrays."""
    if num.size == 0:
        return Fraction(0)
    dens = [int(d) for d in np.unique(den)]
    if dens[0] <= 0:
        raise IndexDomainError("non-positive denominator in exact index")
    lcm = reduce(math.lcm, dens, 1)
    peak = int(np.abs(num).max()) * (lcm // dens[0]) * num.size
    if lcm < _INT64_SAFE and peak < _INT64_SAFE:
        total = int(np.sum(num * (lcm // den)))
    else:
        scale = np.array([lcm // int(d) for d in den.tolist()], dtype=object)
        total = int(np.sum(num.astype(object) * scale))
    return Fraction(total, lcm)


def _float_sum(terms: np.ndarray, parallel: bool, chunks: int = 8) -> float:
    if not parallel or terms.size < 4 * chunks:
        return math.fsum(terms.tolist())
    # partial sums arrive in completion order; result may differ in the last ulps
    parts = np.array_split(terms, chunks)
    total = 0.0
    with ThreadPoolExecutor(max_workers=chunks) as pool:
        for fut in as_completed([pool.submit(np.sum, p) for p in parts]):
            total += float(fut.result())
    return total


# -- contributions ---------------------------------------------------------


def _i(x):
    return np.asarray(x, dtype=np.int64)


def _pow_ratio(alpha: Fraction):
    k = int(alpha)

    def kernel(x, y):
        p = _i(x) * _i(y)
        if k >= 0:
            return p**k, np.ones_like(p)
        return np.ones_like(p), p ** (-k)

    def contribution(x, y):
        return Fraction(x * y) ** k

    return kernel, contribution


def randic_spec(alpha: Number | str) -> IndexSpec:
    """General Randić index ``sum (du * dv) ** alpha``."""
    a = Fraction(alpha).limit_denominator(10**6) if not isinstance(alpha, Fraction) else alpha
    name = f"R_{a}"
    if a.denominator == 1:
        kernel, contribution = _pow_ratio(a)
        return IndexSpec(name, Mode.DEGREE, True, contribution, kernel, f"general Randić, alpha={a}", alpha=a)
    fa = float(a)
    return IndexSpec(
        name,
        Mode.DEGREE,
        False,
        lambda x, y: float(x * y) ** fa,
        lambda x, y: (_i(x) * _i(y)).astype(np.float64) ** fa,
        f"general Randić, alpha={a}",
        alpha=a,
    )


def _abc_term(x, y):
    if x * y <= 0 or x + y < 2:
        raise IndexDomainError(f"ABC-type term undefined for pair ({x}, {y})")
    return math.sqrt((x + y - 2) / (x * y))


def _abc_kernel(x, y):
    x, y = _i(x), _i(y)
    return np.sqrt((x + y - 2) / (x * y))


def _abc_bad(x, y):
    x, y = _i(x), _i(y)
    return (x * y <= 0) | (x + y < 2)


def _ga_term(x, y):
    return 2 * math.sqrt(x * y) / (x + y)


def _ga_kernel(x, y):
    x, y = _i(x), _i(y)
    return 2 * np.sqrt((x * y).astype(np.float64)) / (x + y)


def _azi_term(x, y):
    if x + y == 2:
        raise IndexDomainError(f"AZI undefined for pair ({x}, {y}): du + dv - 2 = 0")
    return Fraction(x * y, x + y - 2) ** 3


def _exact(name, contribution, num, den, description, basis=Mode.DEGREE, domain=None):
    return IndexSpec(
        name,
        basis,
        True,
        contribution,
        lambda x, y: (num(_i(x), _i(y)), den(_i(x), _i(y))),
        description,
        domain=domain,
    )


def _one(x, y):
    return np.ones_like(x)


_R_HALF = randic_spec(Fraction(-1, 2))

_SPECS = [
    _R_HALF,
    randic_spec(-1),
    randic_spec(Fraction(1, 2)),
    randic_spec(1),
    _exact("F", lambda x, y: Fraction(x * x + y * y), lambda x, y: x * x + y * y, _one, "forgotten index"),
    IndexSpec(
        "J",
        Mode.DEGREE,
        False,
        _R_HALF.contribution,
        _R_HALF.kernel,
        "Balaban index m/(m-n+2) * sum (du dv)^-1/2",
        balaban_factor=True,
    ),
    _exact("ReZG1", lambda x, y: Fraction(x * y, x + y), lambda x, y: x * y, lambda x, y: x + y, "sum du dv / (du + dv)"),
    _exact("ReZG2", lambda x, y: Fraction(x + y, x * y), lambda x, y: x + y, lambda x, y: x * y, "sum (du + dv) / (du dv)"),
    _exact("ReZG3", lambda x, y: Fraction(x * y * (x + y)), lambda x, y: x * y * (x + y), _one, "sum du dv (du + dv)"),
    IndexSpec("ABC4", Mode.DEGREE_SUM, False, _abc_term, _abc_kernel, "ABC on neighbour-degree sums", domain=_abc_bad),
    IndexSpec("GA5", Mode.DEGREE_SUM, False, _ga_term, _ga_kernel, "GA on neighbour-degree sums"),
    _exact("M1", lambda x, y: Fraction(x + y), lambda x, y: x + y, _one, "first Zagreb index"),
    _exact("M2", lambda x, y: Fraction(x * y), lambda x, y: x * y, _one, "second Zagreb index"),
    _exact("H", lambda x, y: Fraction(2, x + y), lambda x, y: 2 * np.ones_like(x), lambda x, y: x + y, "harmonic index"),
    IndexSpec("ABC", Mode.DEGREE, False, _abc_term, _abc_kernel, "atom-bond connectivity", domain=_abc_bad),
    IndexSpec("GA", Mode.DEGREE, False, _ga_term, _ga_kernel, "geometric-arithmetic index"),
    _exact(
        "AZI",
        _azi_term,
        lambda x, y: (x * y) ** 3,
        lambda x, y: (x + y - 2) ** 3,
        "augmented Zagreb index",
        domain=lambda x, y: _i(x) + _i(y) == 2,
    ),
]

INDICES: dict[str, IndexSpec] = {s.name: s for s in _SPECS}

_ALIASES = {"R": "R_-1/2", "RANDIC": "R_-1/2", "R-1/2": "R_-1/2", "BALABAN": "J", "FORGOTTEN": "F"}


def get_index(name: str) -> IndexSpec:
    if name in INDICES:
        return INDICES[name]
    folded = {k.upper(): v for k, v in INDICES.items()}
    key = name.strip().upper()
    key = _ALIASES.get(key, key).upper()
    if key in folded:
        return folded[key]
    raise KeyError(f"unknown index {name!r}; known: {', '.join(INDICES)}")


# -- evaluation routes -----------------------------------------------------


def _balaban_factor(summary: GraphSummary) -> Fraction:
    n, m = summary
    if m - n + 2 == 0:
        raise IndexDomainError("Balaban undefined (m-n+2=0)")
    return Fraction(m, m - n + 2)


def edge_sum_index(
    g: Graph,
    spec: IndexSpec | str,
    *,
    reverse: bool = False,
    parallel: bool = False,
) -> IndexValue:
    """Sum ``spec`` over the edges of ``g``.

    ``reverse`` walks the edges backwards (for order-independence checks).
    ``parallel`` splits floating sums into chunks reduced on a thread pool;
    the default is a deterministic, correctly rounded sum.
    """
    if isinstance(spec, str):
        spec = get_index(spec)
    x, y = edge_values(g, spec.basis)
    if reverse:
        x, y = x[::-1], y[::-1]
    if spec.domain is not None and x.size:
        bad = spec.domain(x, y)
        if np.any(bad):
            k = int(np.argmax(bad))
            if reverse:
                k = x.size - 1 - k
            u, v = g.vertices[g.index_edges[k, 0]], g.vertices[g.index_edges[k, 1]]
            raise IndexDomainError(f"{spec.name} undefined on edge {u!r} -- {v!r}")
    if spec.exact:
        num, den = spec.kernel(x, y)
        value: Number = _exact_sum(num, den)
    else:
        value = _float_sum(np.asarray(spec.kernel(x, y), dtype=np.float64), parallel)
    if spec.balaban_factor:
        f = _balaban_factor(g.summary)
        value = value * f if spec.exact else float(value) * f.numerator / f.denominator
    return IndexValue(spec.name, value, spec.basis)


def class_sum_index(
    classes: Partition | Mapping[tuple[int, int], int],
    spec: IndexSpec | str,
    summary: GraphSummary | None = None,
) -> IndexValue:
    """Evaluate ``spec`` as ``sum count * contribution(key)`` over a partition.

    The partition must match ``spec.basis``; ``summary`` is needed only for
    the Balaban factor.
    """
    if isinstance(spec, str):
        spec = get_index(spec)
    items = classes.counts.items() if isinstance(classes, Partition) else classes.items()
    if spec.exact:
        value: Number = sum((c * spec.contribution(int(a), int(b)) for (a, b), c in items), Fraction(0))
    else:
        value = math.fsum(c * spec.contribution(int(a), int(b)) for (a, b), c in items)
    if spec.balaban_factor:
        if summary is None:
            raise ValueError("Balaban index needs the graph summary")
        f = _balaban_factor(summary)
        value = value * f if spec.exact else value * f.numerator / f.denominator
    return IndexValue(spec.name, value, spec.basis)


def randic(g: Graph, alpha: Number | str = Fraction(-1, 2)) -> IndexValue:
    return edge_sum_index(g, randic_spec(Fraction(alpha) if isinstance(alpha, str) else alpha))


def forgotten(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["F"])


def balaban(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["J"])


def rezg1(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["ReZG1"])


def rezg2(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["ReZG2"])


def rezg3(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["ReZG3"])


def abc4(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["ABC4"])


def ga5(g: Graph) -> IndexValue:
    return edge_sum_index(g, INDICES["GA5"])


EXTENDED = ("M1", "M2", "H", "ABC", "GA", "AZI")


def extended_indices(g: Graph) -> dict[str, IndexValue]:
    """Zagreb, harmonic, ABC, GA and augmented Zagreb indices."""
    return {name: edge_sum_index(g, INDICES[name]) for name in EXTENDED}


def compute_all(g: Graph, names=None, *, parallel: bool = False) -> dict[str, IndexValue]:
    specs = [get_index(n) for n in names] if names else list(INDICES.values())
    return {s.name: edge_sum_index(g, s, parallel=parallel) for s in specs}


def compute_by_classes(g: Graph, names=None) -> dict[str, IndexValue]:
    """Every index through the partition route instead of the edge route."""
    specs = [get_index(n) for n in names] if names else list(INDICES.values())
    parts = {mode: partition(g, mode) for mode in Mode}
    return {s.name: class_sum_index(parts[s.basis], s, g.summary) for s in specs}
