"""Exact scalar arithmetic over Q(i).

Every matrix, vector and form coefficient in this package is a
:class:`GaussianRational` ``re + im*i`` with exact ``Fraction`` components.
Floating point is deliberately absent: ranks and cohomology dimensions are
integers, and only exact arithmetic makes them decidable.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["GaussianRational", "ZERO", "ONE", "I", "rational_to_str", "rational_from_str"]

_coercible = (int, Fraction)


class GaussianRational:
    """An element of Q(i), stored as two Fractions (always in lowest terms)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _new(cls, re, im):
        # internal fast path: re, im already Fractions
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    @classmethod
    def of(cls, x) -> "GaussianRational":
        """Coerce an int, Fraction or GaussianRational to a GaussianRational."""
        if isinstance(x, cls):
            return x
        if isinstance(x, _coercible):
            return cls._new(Fraction(x), Fraction(0))
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            if not (other.re or other.im):
                return self
            if not (self.re or self.im):
                return other
            return GaussianRational._new(self.re + other.re, self.im + other.im)
        if isinstance(other, _coercible):
            return GaussianRational._new(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            if not (other.re or other.im):
                return self
            return GaussianRational._new(self.re - other.re, self.im - other.im)
        if isinstance(other, _coercible):
            return GaussianRational._new(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _coercible):
            return GaussianRational._new(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b = self.re, self.im
            c, d = other.re, other.im
            # zero components dominate in echelon workloads; skip dead Fraction ops
            if not b:
                if not d:
                    return GaussianRational._new(a * c, b)
                if not a:
                    return GaussianRational._new(a, b)
                return GaussianRational._new(a * c, a * d)
            if not d:
                if not c:
                    return GaussianRational._new(c, c)
                return GaussianRational._new(a * c, b * c)
            return GaussianRational._new(a * c - b * d, a * d + b * c)
        if isinstance(other, _coercible):
            return GaussianRational._new(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _coercible):
            return GaussianRational._new(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            c, d = other.re, other.im
            nrm = c * c + d * d
            if not nrm:
                raise ZeroDivisionError("division by zero in Q(i)")
            a, b = self.re, self.im
            return GaussianRational._new((a * c + b * d) / nrm, (b * c - a * d) / nrm)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _coercible):
            return GaussianRational.of(other) / self
        return NotImplemented

    def __neg__(self):
        return GaussianRational._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._new(self.re, -self.im)

    # -- comparisons / hashing ----------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _coercible):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # agrees with hash(Fraction)/hash(int) when the value is real
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display / serialization --------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return rational_to_str(self.re)
        if not self.re:
            return f"{rational_to_str(self.im)}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_to_str(self.re)} {sign} {rational_to_str(abs(self.im))}*i"

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @classmethod
    def from_json(cls, d) -> "GaussianRational":
        if isinstance(d, str):
            return cls._new(rational_from_str(d), Fraction(0))
        return cls._new(rational_from_str(d.get("re", "0")), rational_from_str(d.get("im", "0")))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def rational_to_str(x: Fraction) -> str:
    """Render a Fraction as "p" or "p/q" with positive q in lowest terms."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse "p" or "p/q". Fraction normalizes sign and lowest terms."""
    return Fraction(s.strip())
