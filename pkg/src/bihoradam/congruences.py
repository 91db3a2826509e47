"""Divisibility checks for residuals that may carry rational scale factors.

A rational x = p/q (reduced) counts as congruent to zero modulo an
integer M when M divides p and gcd(q, M) = 1. When gcd(q, M) != 1, or
|M| <= 1, the congruence carries no information and the status is
Inapplicable rather than a verdict.

Each residual check below subtracts a scaled window term from a distant
term. The expansion that produces the residual introduces ratio powers
whose denominators are powers of a single parameter: a for the check
against the fundamental modulus u(m), b for the checks against the
companion modulus v(m). The congruence is therefore a statement in the
integers localized away from that parameter. When the modulus shares a
prime with it, the claim says nothing about that prime, plain integer
divisibility of the residual can fail even though the localized
congruence holds, and the check reports Inapplicable. With that guard
in place a Fails status is impossible for integer initial values; any
Fails indicates a defect in the implementation itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .reports import CongruenceReport, Status
from .sequences import (
    InvalidIndex,
    InvalidParams,
    SeqSpec,
    parity,
    prefix_naive,
    u_spec,
    v_spec,
)


def congruent_zero(x: Fraction | int, modulus: int) -> Status:
    """Classify x = p/q (reduced) against an integer modulus M.

    |M| <= 1: Inapplicable. gcd(q, |M|) != 1: Inapplicable. Otherwise
    Holds exactly when M divides p.
    """
    if not isinstance(modulus, int):
        raise TypeError("modulus must be an integer")
    m = abs(modulus)
    if m <= 1:
        return Status.INAPPLICABLE
    f = Fraction(x)
    if gcd(f.denominator, m) != 1:
        return Status.INAPPLICABLE
    return Status.HOLDS if f.numerator % m == 0 else Status.FAILS


def _require_congruence_spec(spec: SeqSpec) -> None:
    p = spec.params
    if p.a <= 0 or p.b <= 0 or p.c <= 0:
        raise InvalidParams("congruence checks require positive a, b and c")
    if spec.w0.denominator != 1 or spec.w1.denominator != 1:
        raise InvalidParams("congruence checks require integer initial values")


def _classify(residual: Fraction, modulus: int, denominator_base: int) -> Status:
    # The residual lives in Z[1/denominator_base]; a modulus sharing a
    # factor with that base is outside the ring the claim is made in.
    if gcd(denominator_base, abs(modulus)) != 1:
        return Status.INAPPLICABLE
    return congruent_zero(residual, modulus)


def check_fundamental_modulus(spec: SeqSpec, m: int, n: int, r: int) -> CongruenceReport:
    """w(mn+r) - (b/a)^(parity(m)(n+parity(n))/2 - parity(mn) parity(r)) c^n u(m-1)^n w(r)
    tested for divisibility by u(m).

    Denominators in the residual are powers of a, so a modulus sharing a
    factor with a yields Inapplicable.
    """
    _require_congruence_spec(spec)
    if m < 1 or n < 1 or r < 1:
        raise InvalidIndex("m, n and r must be at least 1")
    p = spec.params
    u = prefix_naive(u_spec(p), max(m, n + 1) + 1)
    w = prefix_naive(spec, m * n + r + 1)
    exponent = parity(m) * ((n + parity(n)) // 2) - parity(m * n) * parity(r)
    residual = w[m * n + r] - Fraction(p.b, p.a) ** exponent * p.c**n * u[m - 1] ** n * w[r]
    modulus = int(u[m])
    status = _classify(residual, modulus, p.a)
    return CongruenceReport("cor1", {"m": m, "n": n, "r": r}, residual, modulus, status)


def check_companion_modulus(spec: SeqSpec, m: int, n: int, r: int) -> CongruenceReport:
    """w(2mn+r) - (-1)^((m+1)n) c^(mn) w(r) tested for divisibility by v(m).

    Denominators in the underlying expansion are powers of b, so a
    modulus sharing a factor with b yields Inapplicable.
    """
    _require_congruence_spec(spec)
    if m < 1 or n < 1 or r < 1:
        raise InvalidIndex("m, n and r must be at least 1")
    p = spec.params
    v = prefix_naive(v_spec(p), m + 1)
    w = prefix_naive(spec, 2 * m * n + r + 1)
    residual = w[2 * m * n + r] - (-1) ** ((m + 1) * n) * Fraction(p.c) ** (m * n) * w[r]
    modulus = int(v[m])
    status = _classify(residual, modulus, p.b)
    return CongruenceReport("cor2", {"m": m, "n": n, "r": r}, residual, modulus, status)


def check_companion_modulus_pair(
    spec: SeqSpec, n: int, m: int, r: int, d: int
) -> CongruenceReport:
    """w(2(m+r)n+d) - (-1)^(n(m+1)) c^(mn) w(2rn+d) tested for divisibility by v(m).

    Same localization as check_companion_modulus: denominators are
    powers of b.
    """
    _require_congruence_spec(spec)
    if n < 1 or m < 1 or r < 1 or d < 1:
        raise InvalidIndex("n, m, r and d must be at least 1")
    p = spec.params
    v = prefix_naive(v_spec(p), m + 1)
    w = prefix_naive(spec, 2 * (m + r) * n + d + 1)
    residual = (
        w[2 * (m + r) * n + d]
        - (-1) ** (n * (m + 1)) * Fraction(p.c) ** (m * n) * w[2 * r * n + d]
    )
    modulus = int(v[m])
    status = _classify(residual, modulus, p.b)
    return CongruenceReport(
        "cor3", {"n": n, "m": m, "r": r, "d": d}, residual, modulus, status
    )
