"""Structured results of identity and congruence checks.

Reports are plain immutable records. Rational values serialize as
strings ("p" or "p/q") so downstream consumers never lose precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ring import QuadElement


class Status(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INAPPLICABLE = "Inapplicable"


def fmt_rational(value: Fraction | int) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _fmt_quad(value: QuadElement) -> dict:
    return {"x": fmt_rational(value.x), "y": fmt_rational(value.y), "delta": value.delta}


@dataclass(frozen=True)
class IdentityReport:
    """Two exactly computed sides of one identity instance."""

    name: str
    indices: Mapping[str, object]
    lhs: Fraction
    rhs: Fraction
    equal: bool

    def as_dict(self) -> dict:
        return {
            "checker": self.name,
            "indices": dict(self.indices),
            "lhs": fmt_rational(self.lhs),
            "rhs": fmt_rational(self.rhs),
            "equal": self.equal,
        }


@dataclass(frozen=True)
class QuadIdentityReport:
    """Identity instance whose sides live in Q[t]/(t^2 - delta)."""

    name: str
    indices: Mapping[str, object]
    lhs: QuadElement
    rhs: QuadElement
    equal: bool

    def as_dict(self) -> dict:
        return {
            "checker": self.name,
            "indices": dict(self.indices),
            "lhs": _fmt_quad(self.lhs),
            "rhs": _fmt_quad(self.rhs),
            "equal": self.equal,
        }


@dataclass(frozen=True)
class CongruenceReport:
    """A residual tested for divisibility by an integer modulus."""

    name: str
    indices: Mapping[str, object]
    residual: Fraction
    modulus: int
    status: Status

    def as_dict(self) -> dict:
        return {
            "checker": self.name,
            "indices": dict(self.indices),
            "residual": fmt_rational(self.residual),
            "modulus": self.modulus,
            "status": self.status.value,
        }


def identity_report(
    name: str, indices: Mapping[str, object], lhs: Fraction, rhs: Fraction
) -> IdentityReport:
    return IdentityReport(name, dict(indices), lhs, rhs, lhs == rhs)


def quad_identity_report(
    name: str, indices: Mapping[str, object], lhs: QuadElement, rhs: QuadElement
) -> QuadIdentityReport:
    return QuadIdentityReport(name, dict(indices), lhs, rhs, lhs == rhs)
