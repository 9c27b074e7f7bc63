"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import zip_longest
from numbers import Rational
from typing import Iterable, Union

__all__ = ["Poly"]

Scalar = Union[int, Fraction]

_TERM = re.compile(r"([+-]?)\(?(\d+(?:/\d+)?)?\)?(r|n)?(?:\^(\d+))?")


class Poly:
    """Polynomial in one variable, coefficients stored low degree first.

    >>> p = Poly.parse("18r^2-36r+18")
    >>> p(4)
    Fraction(162, 1)
    >>> str(p * Fraction(1, 2))
    '9r^2 - 18r + 9'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Parse the plain forms used in edge-partition tables.

        Accepts sums of terms like ``36r^2``, ``-108r``, ``84`` or
        ``(3/2)r``, an optional outer ``(...)/k`` and either ``r`` or ``n``
        as the variable. ``str(p)`` parses back to ``p``.
        """
        s = text.replace(" ", "").replace("−", "-")
        divisor = 1
        m = re.fullmatch(r"\((.*)\)/(\d+)", s)
        if m:
            s, divisor = m.group(1), int(m.group(2))
        if not s:
            raise ValueError(f"empty polynomial: {text!r}")
        coeffs: dict[int, Fraction] = {}
        pos = 0
        while pos < len(s):
            t = _TERM.match(s, pos)
            if t is None or t.end() == pos or (t.group(2) is None and t.group(3) is None):
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            sign = -1 if t.group(1) == "-" else 1
            if pos > 0 and not t.group(1):
                raise ValueError(f"missing operator in {text!r}")
            c = Fraction(t.group(2)) if t.group(2) else Fraction(1)
            if t.group(3):
                power = int(t.group(4)) if t.group(4) else 1
            elif t.group(4):
                raise ValueError(f"exponent without variable in {text!r}")
            else:
                power = 0
            coeffs[power] = coeffs.get(power, Fraction(0)) + sign * c
            pos = t.end()
        top = max(coeffs)
        return cls(coeffs.get(k, 0) / divisor for k in range(top + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, Rational):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, Rational):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mag_s = "" if mag == 1 and k else str(mag)
            if mag_s and "/" in mag_s and k:
                mag_s = f"({mag_s})"
            var = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            term = f"{mag_s}{var}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {term}")
        return " ".join(parts)
