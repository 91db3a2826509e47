"""Exact arithmetic in the quadratic ring Q[t]/(t^2 - delta).

Elements are formal pairs x + y*t with rational x, y over a fixed integer
discriminant delta != 0. Multiplication reduces t*t to delta, which is
valid whether or not delta is a perfect square; when it is a square the
ring contains zero divisors, and inversion reports them instead of
silently dividing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class ZeroDivisorError(ArithmeticError):
    """Inversion of an element whose norm is zero."""


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"expected a rational value, got {type(value).__name__}")


@dataclass(frozen=True)
class QuadElement:
    """x + y*t in Q[t]/(t^2 - delta); immutable and hashable."""

    x: Fraction
    y: Fraction
    delta: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))
        if not isinstance(self.delta, int):
            raise TypeError("delta must be an integer")
        if self.delta == 0:
            raise ValueError("delta must be nonzero")

    @classmethod
    def scalar(cls, value: object, delta: int) -> QuadElement:
        """Embed a rational number as value + 0*t."""
        return cls(_as_fraction(value), Fraction(0), delta)

    def _coerce(self, other: object) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.delta != self.delta:
                raise ValueError(
                    f"mismatched discriminants: {self.delta} vs {other.delta}"
                )
            return other
        if isinstance(other, Rational):
            return QuadElement.scalar(other, self.delta)
        return None

    def __add__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElement(self.x + rhs.x, self.y + rhs.y, self.delta)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElement(self.x - rhs.x, self.y - rhs.y, self.delta)

    def __rsub__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.x, -self.y, self.delta)

    def __mul__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElement(
            self.x * rhs.x + self.y * rhs.y * self.delta,
            self.x * rhs.y + self.y * rhs.x,
            self.delta,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def __pow__(self, exponent: int) -> QuadElement:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadElement.scalar(1, self.delta)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def conjugate(self) -> QuadElement:
        return QuadElement(self.x, -self.y, self.delta)

    def norm(self) -> Fraction:
        """N(x + y*t) = x^2 - delta*y^2, the product with the conjugate."""
        return self.x * self.x - self.y * self.y * self.delta

    def inverse(self) -> QuadElement:
        # conjugate / norm; norm 0 means the element is a zero divisor
        # (possible only when delta is a perfect square)
        n = self.norm()
        if n == 0:
            raise ZeroDivisorError(f"{self} has norm zero and is not invertible")
        return QuadElement(self.x / n, -self.y / n, self.delta)

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*t"
