"""Exact arithmetic over the Gaussian rationals Q(i).

A scalar is re + im*i with both parts arbitrary-precision rationals.
`fractions.Fraction` keeps every part in lowest terms with a positive
denominator, so equality is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction


class GaussRational:
    """An element of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "GaussRational":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "GaussRational":
        return cls(1, 0)

    @classmethod
    def i(cls) -> "GaussRational":
        return cls(0, 1)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_rational(self) -> bool:
        return not self.im

    # -- ring/field operations ------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        n = other.re * other.re + other.im * other.im
        return GaussRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussRational.one() / self ** (-n)
        result = GaussRational.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # -- text form -------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


def _coerce(value):
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRational(value)
    return NotImplemented


def format_scalar(z: GaussRational) -> str:
    """Canonical text form: `a/b`, `c/d*i`, or `a/b+c/d*i`.

    A unit imaginary part prints as bare `i`.  The output always parses
    back to the same value.
    """
    if z.is_zero():
        return "0"
    parts = []
    if z.re:
        parts.append(str(z.re))
    if z.im:
        mag = abs(z.im)
        body = "i" if mag == 1 else f"{mag}*i"
        if parts:
            parts.append("+" if z.im > 0 else "-")
            parts.append(body)
        else:
            parts.append(body if z.im > 0 else "-" + body)
    return "".join(parts)


def parse_scalar(text: str) -> GaussRational:
    """Parse scalar literals such as `3/2`, `-1/2*i`, `3/2+1/2*i`, `i`."""
    from .polynomials import parse_polynomial, VariableTable

    table = VariableTable((), ())
    poly = parse_polynomial(text, table)
    return poly.constant_value()
