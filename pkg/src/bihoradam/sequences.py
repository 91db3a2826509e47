"""Bi-periodic Horadam sequences: recurrence oracle, closed forms, and
generating-function coefficients.

A sequence w is fixed by integer parameters (a, b, c) and initial values
(w0, w1):

    w(0) = w0,  w(1) = w1,
    w(n) = a*w(n-1) + c*w(n-2)   for even n >= 2,
    w(n) = b*w(n-1) + c*w(n-2)   for odd n >= 2.

Named presets: the fundamental sequence u has (w0, w1) = (0, 1), its
companion v has (2, b), and the scaled companion has (2a, ab) with c = 1.
`term_naive` iterates the recurrence directly and is the ground truth
that every other evaluation route is compared against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .reports import IdentityReport, fmt_rational, identity_report
from .ring import QuadElement


class InvalidParams(ValueError):
    """Parameter set violates a documented precondition."""


class InvalidIndex(ValueError):
    """Index argument outside a checker's stated domain."""


def parity(n: int) -> int:
    """n - 2*floor(n/2): 0 for even n, 1 for odd n."""
    return n & 1


@dataclass(frozen=True)
class Params:
    """Recurrence multipliers. All nonzero, with a^2 b^2 + 4abc != 0."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int):
                raise InvalidParams(f"{name} must be an integer")
            if value == 0:
                raise InvalidParams(f"{name} must be nonzero")
        if self.discriminant == 0:
            raise InvalidParams("a^2*b^2 + 4*a*b*c must be nonzero")

    @property
    def discriminant(self) -> int:
        ab = self.a * self.b
        return ab * ab + 4 * ab * self.c


class Family(enum.Enum):
    GENERAL = "general"
    U = "u"  # fundamental: (0, 1)
    V = "v"  # companion: (2, b)
    T = "t"  # scaled companion: (2a, ab), defined only for c = 1


_FAMILY_INITS = {
    Family.U: lambda p: (Fraction(0), Fraction(1)),
    Family.V: lambda p: (Fraction(2), Fraction(p.b)),
    Family.T: lambda p: (Fraction(2 * p.a), Fraction(p.a * p.b)),
}


@dataclass(frozen=True)
class SeqSpec:
    """A fully determined sequence: parameters, initial values, family tag."""

    params: Params
    w0: Fraction
    w1: Fraction
    family: Family = Family.GENERAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "w0", _as_fraction(self.w0, "w0"))
        object.__setattr__(self, "w1", _as_fraction(self.w1, "w1"))
        if self.family is not Family.GENERAL:
            if self.family is Family.T and self.params.c != 1:
                raise InvalidParams("family t requires c = 1")
            expect = _FAMILY_INITS[self.family](self.params)
            if (self.w0, self.w1) != expect:
                raise InvalidParams(
                    f"family {self.family.value} fixes initial values "
                    f"({fmt_rational(expect[0])}, {fmt_rational(expect[1])})"
                )


def _as_fraction(value: object, name: str) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(value)
    raise InvalidParams(f"{name} must be a rational number")


def make_spec(
    a: int,
    b: int,
    c: int,
    family: Family | str = Family.GENERAL,
    w0: object = None,
    w1: object = None,
) -> SeqSpec:
    """Build a SeqSpec; family presets derive their own initial values."""
    params = Params(a, b, c)
    fam = Family(family) if not isinstance(family, Family) else family
    if fam is Family.GENERAL:
        if w0 is None or w1 is None:
            raise InvalidParams("family general requires explicit w0 and w1")
        return SeqSpec(params, w0, w1, fam)
    if w0 is not None or w1 is not None:
        preset = _FAMILY_INITS[fam](params)
        if w0 is None or w1 is None or (Fraction(w0), Fraction(w1)) != preset:
            raise InvalidParams(
                f"family {fam.value} fixes initial values; do not override them"
            )
    init0, init1 = _FAMILY_INITS[fam](params)
    return SeqSpec(params, init0, init1, fam)


def u_spec(params: Params) -> SeqSpec:
    return SeqSpec(params, Fraction(0), Fraction(1), Family.U)


def v_spec(params: Params) -> SeqSpec:
    return SeqSpec(params, Fraction(2), Fraction(params.b), Family.V)


def t_spec(params: Params) -> SeqSpec:
    return SeqSpec(params, Fraction(2 * params.a), Fraction(params.a * params.b), Family.T)


# Prefixes are cached per spec in power-of-two buckets, capped so a
# single huge index cannot pin an arbitrarily large tuple in memory.
# Tuples are immutable, so concurrent readers always observe a
# consistent prefix.
_PREFIX_CACHE_CAP = 4096


def _extend(terms: list[Fraction], params: Params, count: int) -> list[Fraction]:
    a, b, c = params.a, params.b, params.c
    for n in range(len(terms), count):
        mult = a if n % 2 == 0 else b
        terms.append(mult * terms[n - 1] + c * terms[n - 2])
    return terms


@lru_cache(maxsize=512)
def _cached_prefix(spec: SeqSpec, count: int) -> tuple[Fraction, ...]:
    return tuple(_extend([spec.w0, spec.w1][:count], spec.params, count))


def prefix_naive(spec: SeqSpec, count: int) -> list[Fraction]:
    """First `count` terms w(0) .. w(count-1) by direct recurrence."""
    if count < 1:
        raise InvalidIndex("count must be at least 1")
    bucket = 64
    while bucket < count and bucket < _PREFIX_CACHE_CAP:
        bucket *= 2
    cached = list(_cached_prefix(spec, min(bucket, _PREFIX_CACHE_CAP)))
    if count <= len(cached):
        return cached[:count]
    return _extend(cached, spec.params, count)


def term_naive(spec: SeqSpec, n: int) -> Fraction:
    """w(n) by direct recurrence. The project-wide oracle."""
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    if n < _PREFIX_CACHE_CAP:
        return prefix_naive(spec, n + 1)[n]
    # stream beyond the cache cap holding only a sliding pair
    cached = _cached_prefix(spec, _PREFIX_CACHE_CAP)
    a, b, c = spec.params.a, spec.params.b, spec.params.c
    prev, cur = cached[-2], cached[-1]
    for k in range(_PREFIX_CACHE_CAP, n + 1):
        mult = a if k % 2 == 0 else b
        prev, cur = cur, mult * cur + c * prev
    return cur


def roots(params: Params) -> tuple[QuadElement, QuadElement]:
    """alpha = (ab + t)/2 and beta = (ab - t)/2 in Q[t]/(t^2 - discriminant).

    They satisfy alpha + beta = ab, alpha*beta = -abc, alpha - beta = t.
    """
    d = params.discriminant
    half_ab = Fraction(params.a * params.b, 2)
    half = Fraction(1, 2)
    return QuadElement(half_ab, half, d), QuadElement(half_ab, -half, d)


@dataclass(frozen=True)
class BinetConstants:
    """Coefficients pairing with alpha^n and beta^n in the closed form."""

    A: QuadElement
    B: QuadElement


def binet_constants(spec: SeqSpec) -> BinetConstants:
    """A = (w1 - (beta/a) w0) / (alpha - beta) and B likewise with alpha."""
    alpha, beta = roots(spec.params)
    t = alpha - beta  # invertible: norm(t) = -discriminant != 0
    w0_over_a = spec.w0 / spec.params.a
    a_const = (spec.w1 - beta * w0_over_a) / t
    b_const = (spec.w1 - alpha * w0_over_a) / t
    return BinetConstants(a_const, b_const)


def term_binet(spec: SeqSpec, n: int) -> Fraction:
    """w(n) = a^parity(n+1) / (ab)^floor(n/2) * (A alpha^n - B beta^n), n >= 1.

    The whole computation runs in the quadratic ring; the t-component of
    the result must cancel exactly, and the rational component is returned.
    """
    if n < 1:
        raise InvalidIndex("closed form is defined for n >= 1; use term_naive for n = 0")
    consts = binet_constants(spec)
    alpha, _ = roots(spec.params)
    alpha_n = alpha**n
    # conjugation commutes with multiplication, so conj(alpha^n) = beta^n
    core = consts.A * alpha_n - consts.B * alpha_n.conjugate()
    a, b = spec.params.a, spec.params.b
    value = core * Fraction(a ** parity(n + 1), (a * b) ** (n // 2))
    if value.y != 0:
        raise ArithmeticError("closed form left a nonzero t-component")
    return value.x


def term_from_fundamental(spec: SeqSpec, n: int) -> Fraction:
    """w(n) = u(n) w1 + c (b/a)^parity(n) u(n-1) w0 with u over the same params.

    Equals term_naive(spec, n) for every n >= 1.
    """
    if n < 1:
        raise InvalidIndex("n must be at least 1")
    p = spec.params
    u = prefix_naive(u_spec(p), n + 1)
    ratio = Fraction(p.b, p.a) ** parity(n)
    return u[n] * spec.w1 + p.c * ratio * u[n - 1] * spec.w0


def check_companion_relation(params: Params, n: int) -> IdentityReport:
    """v(n) = (b/a)^parity(n) * (u(n+1) + c u(n-1)) for n >= 1."""
    if n < 1:
        raise InvalidIndex("n must be at least 1")
    u = prefix_naive(u_spec(params), n + 2)
    lhs = term_naive(v_spec(params), n)
    rhs = Fraction(params.b, params.a) ** parity(n) * (u[n + 1] + params.c * u[n - 1])
    return identity_report("eq5", {"n": n}, lhs, rhs)


def gf_coeffs(spec: SeqSpec, count: int) -> list[Fraction]:
    """First `count` series coefficients of the rational generating function

        (w0 + w1 x + (a w1 - (ab+c) w0) x^2 + c (b w0 - w1) x^3)
        / (1 - (ab + 2c) x^2 + c^2 x^4)

    by exact long division; coefficient k equals w(k).
    """
    if count < 1:
        raise InvalidIndex("count must be at least 1")
    a, b, c = spec.params.a, spec.params.b, spec.params.c
    ab = a * b
    numerator = [
        spec.w0,
        spec.w1,
        a * spec.w1 - (ab + c) * spec.w0,
        c * (b * spec.w0 - spec.w1),
    ]
    denominator = [1, 0, -(ab + 2 * c), 0, c * c]
    coeffs: list[Fraction] = []
    for k in range(count):
        acc = numerator[k] if k < 4 else Fraction(0)
        for j in range(1, min(k, 4) + 1):
            acc -= denominator[j] * coeffs[k - j]
        coeffs.append(acc)  # denominator[0] == 1
    return coeffs
