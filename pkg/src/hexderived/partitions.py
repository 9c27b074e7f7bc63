"""Edge partitions by endpoint degree or endpoint neighbour-degree sum."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

import numpy as np

from .graph import Graph
from .tables import ExpectedTable, Mode

__all__ = [
    "Discrepancy",
    "Partition",
    "PairKey",
    "TableNotApplicable",
    "compare_partitions",
    "degree_partition",
    "edge_values",
    "expected_partition",
    "min_admissible_r",
    "partition",
    "sum_partition",
]


class TableNotApplicable(ValueError):
    """A table row evaluates to a negative (or fractional) edge count."""


class PairKey(NamedTuple):
    lo: int
    hi: int

    @classmethod
    def of(cls, x: int, y: int) -> PairKey:
        return cls(x, y) if x <= y else cls(y, x)


@dataclass(frozen=True)
class Partition:
    """Unordered value pairs mapped to edge counts; zero classes are dropped."""

    counts: Mapping[PairKey, int]

    def __post_init__(self):
        clean = {}
        for k, c in sorted((PairKey.of(*k), int(c)) for k, c in self.counts.items()):
            if c < 0:
                raise ValueError(f"negative count for {k}")
            if c:
                clean[k] = clean.get(k, 0) + c
        object.__setattr__(self, "counts", clean)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(PairKey.of(*key), 0)

    def __iter__(self):
        return iter(self.counts.items())

    def __len__(self) -> int:
        return len(self.counts)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {tuple(k): c for k, c in self.counts.items()}


class Discrepancy(NamedTuple):
    key: PairKey
    actual_count: int
    expected_count: int

    @property
    def delta(self) -> int:
        return self.actual_count - self.expected_count


def edge_values(g: Graph, mode: Mode | str) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex value of both endpoints for every edge in canonical order."""
    values = g.degrees if Mode.parse(mode) is Mode.DEGREE else g.neighbor_degree_sums
    e = g.index_edges
    return values[e[:, 0]], values[e[:, 1]]


def partition(g: Graph, mode: Mode | str) -> Partition:
    x, y = edge_values(g, mode)
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    if lo.size == 0:
        return Partition({})
    pairs, counts = np.unique(np.stack([lo, hi], axis=1), axis=0, return_counts=True)
    return Partition({PairKey(int(a), int(b)): int(c) for (a, b), c in zip(pairs, counts)})


def degree_partition(g: Graph) -> Partition:
    return partition(g, Mode.DEGREE)


def sum_partition(g: Graph) -> Partition:
    return partition(g, Mode.DEGREE_SUM)


def expected_partition(table: ExpectedTable, r: int) -> Partition:
    """Evaluate every row of a published table at ``r``.

    Raises
    ------
    TableNotApplicable
        If any row is negative or non-integral at ``r``, or if a degree table
        is requested below ``r = 4``.
    """
    if table.mode is Mode.DEGREE and r < 4:
        raise TableNotApplicable(f"{table.label} not applicable at r={r}: stated only for r >= 4")
    counts = {}
    for key, poly in table.rows.items():
        v = poly(r)
        if v < 0 or v.denominator != 1:
            raise TableNotApplicable(
                f"{table.label} not applicable at r={r}: row {key} = {poly} evaluates to {v}"
            )
        counts[PairKey(*key)] = int(v)
    return Partition(counts)


def min_admissible_r(table: ExpectedTable, start: int = 2, horizon: int = 1000) -> int:
    """Smallest ``r0 >= start`` such that every row is a nonnegative integer
    for all ``r >= r0``.

    Rows are at most quadratic, so past their largest real root the sign is
    fixed by the leading coefficient; ``horizon`` only needs to clear the
    roots.
    """
    for poly in table.rows.values():
        if poly.coeffs and poly.coeffs[-1] < 0:
            raise TableNotApplicable(f"{table.label}: row {poly} is eventually negative")
    floor = 4 if table.mode is Mode.DEGREE else start
    last_bad = floor - 1
    for r in range(floor, horizon):
        if any(p(r) < 0 or Fraction(p(r)).denominator != 1 for p in table.rows.values()):
            last_bad = r
    return last_bad + 1


def compare_partitions(actual: Partition, expected: Partition) -> list[Discrepancy]:
    """Keys whose counts differ, sorted; a missing key counts as zero."""
    keys = sorted(set(actual.counts) | set(expected.counts))
    return [
        Discrepancy(k, actual[k], expected[k])
        for k in keys
        if actual[k] != expected[k]
    ]
