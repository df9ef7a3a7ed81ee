"""Dense polynomials with exact arbitrary-precision integer coefficients."""

from __future__ import annotations

from math import comb
from typing import Iterable


class Poly:
    """Immutable dense integer polynomial, coefficients in ascending degree.

    Trailing zero coefficients are stripped; the zero polynomial is stored
    with an empty coefficient tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        """Coefficient of x^i, zero beyond the degree."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly((other,))
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly([other * x for x in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shifted(self, m: int) -> "Poly":
        """Multiply by x^m."""
        if not self.coeffs:
            return self
        return Poly((0,) * m + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                parts.append(str(a))
                continue
            head = "" if a == 1 else ("-" if a == -1 else str(a))
            parts.append(f"{head}x" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def to_decimal_strings(self) -> list[str]:
        """Serialized form: decimal strings so consumers never overflow."""
        return [str(a) for a in self.coeffs]

    @staticmethod
    def from_decimal_strings(items: Iterable[str]) -> "Poly":
        return Poly([int(s) for s in items])


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def one_plus_x_pow(m: int) -> Poly:
    """(1 + x)^m via the binomial row."""
    if m < 0:
        raise ValueError("negative exponent")
    return Poly([comb(m, i) for i in range(m + 1)])
