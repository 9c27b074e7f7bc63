"""Published edge-partition tables, transcribed row by row.

Each row keeps the count exactly as printed so the transcription can be
audited by eye; :mod:`hexderived.partitions` parses them into :class:`Poly`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .constructions import Family
from .polynomial import Poly

__all__ = ["ExpectedTable", "Mode", "TABLES", "get_table"]


class Mode(str, Enum):
    DEGREE = "degree"
    DEGREE_SUM = "degree-sum"

    @classmethod
    def parse(cls, name: str | Mode) -> Mode:
        if isinstance(name, Mode):
            return name
        key = str(name).strip().lower().replace("_", "-")
        if key in ("sum", "s"):
            key = "degree-sum"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown partition mode {name!r} (known: degree, degree-sum)") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExpectedTable:
    family: Family
    mode: Mode
    label: str
    printed: tuple[tuple[int, int, str], ...]
    rows: dict[tuple[int, int], Poly] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = {}
        for lo, hi, text in self.printed:
            key = (min(lo, hi), max(lo, hi))
            if key in rows:
                raise ValueError(f"{self.label}: duplicate row {key}")
            rows[key] = Poly.parse(text)
        object.__setattr__(self, "rows", rows)


_HDN3_DEGREE = (
    (4, 4, "18r^2-36r+18"),
    (4, 7, "24"),
    (4, 10, "36r-72"),
    (4, 18, "36r^2-108r+84"),
    (7, 10, "12"),
    (7, 18, "6"),
    (10, 10, "6r-18"),
    (10, 18, "12r-24"),
    (18, 18, "9r^2-33r+30"),
)

_HDN3_SUM = (
    (25, 33, "12"),
    (25, 36, "12"),
    (25, 54, "12"),
    (25, 77, "12"),
    (28, 36, "12r-36"),
    (28, 77, "12"),
    (28, 80, "12r-48"),
    (33, 36, "12"),
    (33, 54, "12"),
    (33, 129, "12"),
    (36, 36, "12r-30"),
    (36, 44, "12r-24"),
    (36, 77, "48"),
    (36, 80, "24r-96"),
    (36, 129, "24"),
    (36, 140, "24r-72"),
    (44, 44, "18r^2-72r+72"),
    (44, 129, "36"),
    (44, 140, "48r-144"),
    (44, 156, "36r^2-180r+228"),
    (54, 77, "12"),
    (54, 129, "6"),
    (77, 80, "12"),
    (77, 129, "12"),
    (77, 140, "12"),
    (80, 80, "6r-30"),
    (80, 140, "12r-48"),
    (129, 140, "12"),
    (129, 156, "6"),
    (140, 140, "6r-24"),
    (140, 156, "12r-36"),
    (156, 156, "9r^2-51r+72"),
)

_THDN3_DEGREE = (
    (4, 4, "3r^2-6r+9"),
    (4, 10, "18r-30"),
    (4, 18, "6r^2-30r+36"),
    (10, 10, "3r-6"),
    (10, 18, "6r-18"),
    (18, 18, "(3r^2-21r+36)/2"),
)

_THDN3_SUM = (
    (22, 22, "3"),
    (22, 28, "12"),
    (22, 36, "6"),
    (22, 66, "6r-12"),
    (28, 66, "24"),
    (28, 80, "6r-24"),
    (36, 36, "6r-18"),
    (36, 44, "6r-24"),
    (36, 66, "12"),
    (36, 80, "12r-48"),
    (36, 124, "24"),
    (36, 140, "12r-60"),
    (44, 44, "3r^2-24r+48"),
    (44, 124, "12"),
    (44, 140, "24r-120"),
    (44, 156, "6r^2-66r+180"),
    (66, 66, "3"),
    (66, 80, "6"),
    (66, 124, "6"),
    (80, 80, "3r-15"),
    (80, 124, "6"),
    (80, 140, "6r-30"),
    (124, 140, "6"),
    (140, 140, "3r-15"),
    (140, 156, "6r-36"),
    (156, 156, "(3r^2-39r+126)/2"),
)

_RHDN3_DEGREE = (
    (4, 4, "6r^2-12r+10"),
    (4, 7, "8"),
    (4, 10, "24r-44"),
    (4, 18, "12r^2-48r+48"),
    (7, 10, "4"),
    (7, 18, "2"),
    (10, 10, "4r-10"),
    (10, 18, "8r-20"),
    (18, 18, "3r^2-16r+21"),
)

_RHDN3_SUM = (
    (22, 22, "2"),
    (22, 28, "8"),
    (22, 63, "4"),
    (25, 33, "4"),
    (25, 36, "4"),
    (25, 54, "4"),
    (25, 63, "4"),
    (28, 36, "8r-20"),
    (28, 63, "8r-12"),
    (33, 36, "4"),
    (33, 54, "4"),
    (33, 129, "4"),
    (36, 36, "8r-22"),
    (36, 44, "8r-24"),
    (36, 63, "16r-40"),
    (36, 124, "16"),
    (36, 129, "8"),
    (36, 140, "16r-64"),
    (44, 44, "6r^2-36r+54"),
    (44, 124, "8"),
    (44, 129, "12"),
    (44, 140, "32r-128"),
    (44, 156, "12r^2-96r+192"),
    (54, 63, "4"),
    (54, 129, "2"),
    (63, 63, "4r-10"),
    (63, 124, "8"),
    (63, 129, "4"),
    (63, 140, "8r-32"),
    (124, 140, "4"),
    (129, 140, "4"),
    (129, 156, "2"),
    (140, 140, "4r-18"),
    (140, 156, "8r-36"),
    (156, 156, "3r^2-28r+65"),
)

TABLES: dict[tuple[Family, Mode], ExpectedTable] = {
    (t.family, t.mode): t
    for t in (
        ExpectedTable(Family.HDN3, Mode.DEGREE, "HDN3 degree table", _HDN3_DEGREE),
        ExpectedTable(Family.HDN3, Mode.DEGREE_SUM, "HDN3 degree-sum table", _HDN3_SUM),
        ExpectedTable(Family.THDN3, Mode.DEGREE, "THDN3 degree table", _THDN3_DEGREE),
        ExpectedTable(Family.THDN3, Mode.DEGREE_SUM, "THDN3 degree-sum table", _THDN3_SUM),
        ExpectedTable(Family.RHDN3, Mode.DEGREE, "RHDN3 degree table", _RHDN3_DEGREE),
        ExpectedTable(Family.RHDN3, Mode.DEGREE_SUM, "RHDN3 degree-sum table", _RHDN3_SUM),
    )
}


def get_table(family: Family | str, mode: Mode | str) -> ExpectedTable:
    return TABLES[(Family.parse(family), Mode.parse(mode))]
