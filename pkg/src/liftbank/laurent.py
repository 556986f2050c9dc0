"""Exact Laurent polynomial arithmetic over the rationals.

A filter F(z) = sum_n f(n) z^(-n) is stored as a finite map from the
impulse-response index n to a nonzero Fraction.  Note the sign convention:
the stored index n is the exponent of z^(-n), so multiplying by z^(-1)
*increases* indices by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import EmptySupport

Rational = Union[int, Fraction]


def is_dyadic(q: Rational) -> bool:
    """True iff q has a power-of-two denominator (integers included)."""
    den = Fraction(q).denominator
    return den & (den - 1) == 0


@dataclass(frozen=True)
class SymmetryTag:
    """Linear phase classification of a scalar filter.

    kind is one of WS, HS, WA, HA, NONE; axis is the symmetry center
    (an integer for WS/WA, an odd multiple of 1/2 for HS/HA, None for NONE).
    """

    kind: str
    axis: Optional[Fraction] = None


class LaurentPoly:
    """Immutable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Rational], Iterable[Tuple[int, Rational]], None] = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c = {}
        for n, v in items:
            v = Fraction(v)
            if v:
                c[int(n)] = c.get(int(n), 0) + v
        object.__setattr__(self, "_c", {n: v for n, v in c.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, v: Rational) -> "LaurentPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, n: int, v: Rational = 1) -> "LaurentPoly":
        """The monomial v * z^(-n)."""
        return cls({n: v})

    # -- mapping access ----------------------------------------------------

    def coeff(self, n: int) -> Fraction:
        return self._c.get(n, Fraction(0))

    def items(self):
        return self._c.items()

    def indices(self):
        return self._c.keys()

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def is_dyadic(self) -> bool:
        return all(is_dyadic(v) for v in self._c.values())

    @property
    def is_integer(self) -> bool:
        return all(v.denominator == 1 for v in self._c.values())

    # -- measures ----------------------------------------------------------

    def support(self) -> Tuple[int, int]:
        """Support interval [a, b]; raises EmptySupport on the zero polynomial."""
        if not self._c:
            raise EmptySupport("zero polynomial has empty support")
        return min(self._c), max(self._c)

    def order(self) -> int:
        a, b = self.support()
        return b - a

    def supprad(self) -> int:
        a, b = self.support()
        return (b - a + 1) // 2

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for n, v in other._c.items():
            c[n] = c.get(n, 0) + v
        return LaurentPoly(c)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({n: -v for n, v in self._c.items()})

    def __mul__(self, other: Union["LaurentPoly", Rational]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            c = {}
            for n, v in self._c.items():
                for m, w in other._c.items():
                    c[n + m] = c.get(n + m, 0) + v * w
            return LaurentPoly(c)
        return self.scale(other)

    def __rmul__(self, other: Rational) -> "LaurentPoly":
        return self.scale(other)

    def scale(self, k: Rational) -> "LaurentPoly":
        k = Fraction(k)
        return LaurentPoly({n: k * v for n, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z^(-k), i.e. delay the impulse response by k."""
        return LaurentPoly({n + k: v for n, v in self._c.items()})

    def reflect(self) -> "LaurentPoly":
        """F(z) -> F(z^(-1)), i.e. f(n) -> f(-n).  An involution."""
        return LaurentPoly({-n: v for n, v in self._c.items()})

    def __call__(self, z0: Rational) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        z0 = Fraction(z0)
        if not z0:
            raise ZeroDivisionError("cannot evaluate at z = 0")
        return sum((v * z0 ** (-n) for n, v in self._c.items()), Fraction(0))

    # -- symmetry ----------------------------------------------------------

    def symmetry(self) -> SymmetryTag:
        """Classify WS/HS/WA/HA about the forced axis (a + b) / 2."""
        a, b = self.support()
        two_axis = a + b  # axis = (a + b)/2; reflected index is 2*axis - n
        if all(self.coeff(two_axis - n) == v for n, v in self._c.items()):
            kind = "WS" if two_axis % 2 == 0 else "HS"
        elif all(self.coeff(two_axis - n) == -v for n, v in self._c.items()):
            kind = "WA" if two_axis % 2 == 0 else "HA"
        else:
            return SymmetryTag("NONE")
        return SymmetryTag(kind, Fraction(two_axis, 2))

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for n in sorted(self._c):
            v = self._c[n]
            if n == 0:
                parts.append(str(v))
            else:
                e = -n
                parts.append(f"{v}*z^{e}" if e != 1 else f"{v}*z")
        return " + ".join(parts)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.constant(1)
