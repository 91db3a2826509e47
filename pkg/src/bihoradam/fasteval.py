"""O(log n) exact term evaluation.

Both parity classes of w satisfy the same two-step recurrence

    y(j) = (ab + 2c) y(j-1) - c^2 y(j-2),

read off the denominator 1 - (ab+2c) x^2 + c^2 x^4 of the generating
function. Binary powers of the companion matrix of that recurrence
reach any term from two seeds of the right parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .reports import IdentityReport, identity_report
from .sequences import InvalidIndex, Params, SeqSpec, parity, prefix_naive, v_spec


@dataclass(frozen=True)
class StepMatrix:
    """2x2 matrix advancing one parity class of the sequence."""

    a00: Fraction
    a01: Fraction
    a10: Fraction
    a11: Fraction

    def __post_init__(self) -> None:
        for name in ("a00", "a01", "a10", "a11"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def identity(cls) -> StepMatrix:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def __mul__(self, other: StepMatrix) -> StepMatrix:
        if not isinstance(other, StepMatrix):
            return NotImplemented
        return StepMatrix(
            self.a00 * other.a00 + self.a01 * other.a10,
            self.a00 * other.a01 + self.a01 * other.a11,
            self.a10 * other.a00 + self.a11 * other.a10,
            self.a10 * other.a01 + self.a11 * other.a11,
        )

    def __pow__(self, exponent: int) -> StepMatrix:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("matrix powers are defined for nonnegative exponents")
        result = StepMatrix.identity()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def determinant(self) -> Fraction:
        return self.a00 * self.a11 - self.a01 * self.a10


def step_matrix(params: Params) -> StepMatrix:
    """[[ab + 2c, -c^2], [1, 0]]; determinant c^2."""
    ab2c = params.a * params.b + 2 * params.c
    c2 = params.c * params.c
    return StepMatrix(Fraction(ab2c), Fraction(-c2), Fraction(1), Fraction(0))


def term_fast(spec: SeqSpec, n: int) -> Fraction:
    """w(n), equal to term_naive, in O(log n) matrix multiplications."""
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    seeds = prefix_naive(spec, 4)
    if n < 4:
        return seeds[n]
    p = parity(n)
    j = n // 2  # position within the parity class; seeds are y(0), y(1)
    power = step_matrix(spec.params) ** (j - 1)
    return power.a00 * seeds[p + 2] + power.a01 * seeds[p]


def check_double_step(spec: SeqSpec, n: int, k: int) -> IdentityReport:
    """w(n+2k) = (a/b)^(parity(n+1) parity(k)) v(k) w(n+k) - (-c)^k w(n).

    The index-doubling relation; v is the companion sequence of the same
    parameters. Defined for n >= 0, k >= 1.
    """
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    if k < 1:
        raise InvalidIndex("k must be at least 1")
    p = spec.params
    w = prefix_naive(spec, n + 2 * k + 1)
    v = prefix_naive(v_spec(p), k + 1)
    ratio = Fraction(p.a, p.b) ** (parity(n + 1) * parity(k))
    lhs = w[n + 2 * k]
    rhs = ratio * v[k] * w[n + k] - Fraction(-p.c) ** k * w[n]
    return identity_report("lemma2", {"n": n, "k": k}, lhs, rhs)
