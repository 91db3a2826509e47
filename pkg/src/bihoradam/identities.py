"""Checkers for the index-decomposition identities.

Every checker computes both sides of one identity instance with exact
arithmetic and returns a structured report. Report names double as the
CLI catalog identifiers. The even-index split checker can also evaluate
a known-wrong variant (the ratio factor dropped) as a negative control
for the harness itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator

from .reports import (
    IdentityReport,
    QuadIdentityReport,
    identity_report,
    quad_identity_report,
)
from .ring import QuadElement
from .sequences import (
    InvalidIndex,
    InvalidParams,
    Params,
    SeqSpec,
    parity,
    prefix_naive,
    roots,
    u_spec,
    v_spec,
)


class DegenerateModulus(ArithmeticError):
    """A prefactor v(m)^(-n) is requested while v(m) = 0."""


def _require_split_indices(m: int, n: int, r: int) -> None:
    if m <= 1:
        raise InvalidIndex("m must be greater than 1")
    if n < 0 or r < 0:
        raise InvalidIndex("n and r must be nonnegative")


def delta_weight(params: Params, m: int, n: int, r: int, i: int) -> Fraction:
    """(ab)^(floor((i+r)/2) + n floor(m/2)) * a^(-parity(m+1) i - 1 + parity(i+r)) * b^(parity(m)(n-i))."""
    a, b = params.a, params.b
    e_ab = (i + r) // 2 + n * (m // 2)
    e_a = -parity(m + 1) * i - 1 + parity(i + r)
    e_b = parity(m) * (n - i)
    return Fraction(a * b) ** e_ab * Fraction(a) ** e_a * Fraction(b) ** e_b


def split_exponent(m: int, n: int, r: int, i: int) -> int:
    """E = parity(mn+r) - 2 i parity(m) + i - parity(i+r) + n parity(m).

    Even for every index tuple; the split checker verifies this at run time.
    """
    return parity(m * n + r) - 2 * i * parity(m) + i - parity(i + r) + n * parity(m)


def check_index_split_weighted(params: Params, m: int, n: int, r: int) -> IdentityReport:
    """u(mn+r) against its binomial expansion with explicit weights:

        a^(1-parity(mn+r)) / (ab)^floor((mn+r)/2)
            * sum_i C(n,i) c^(n-i) u(m)^i u(m-1)^(n-i) u(i+r) delta_weight(m,n,r,i)
    """
    _require_split_indices(m, n, r)
    p = params
    u = prefix_naive(u_spec(p), max(m * n + r, n + r, m) + 1)
    total = Fraction(0)
    for i in range(n + 1):
        total += (
            comb(n, i)
            * Fraction(p.c) ** (n - i)
            * u[m] ** i
            * u[m - 1] ** (n - i)
            * u[i + r]
            * delta_weight(p, m, n, r, i)
        )
    prefactor = Fraction(p.a ** (1 - parity(m * n + r)), (p.a * p.b) ** ((m * n + r) // 2))
    return identity_report(
        "eq7", {"m": m, "n": n, "r": r}, u[m * n + r], prefactor * total
    )


def check_index_split(spec: SeqSpec, m: int, n: int, r: int) -> IdentityReport:
    """w(mn+r) = sum_i C(n,i) (b/a)^(E/2) c^(n-i) u(m)^i u(m-1)^(n-i) w(i+r),

    with E = split_exponent(m, n, r, i), even for all i.
    """
    _require_split_indices(m, n, r)
    p = spec.params
    u = prefix_naive(u_spec(p), m + 1)
    w = prefix_naive(spec, max(m * n + r, n + r) + 1)
    ratio = Fraction(p.b, p.a)
    rhs = Fraction(0)
    for i in range(n + 1):
        exponent = split_exponent(m, n, r, i)
        if exponent % 2:
            raise ArithmeticError(
                f"odd ratio exponent {exponent} at (m={m}, n={n}, r={r}, i={i})"
            )
        rhs += (
            comb(n, i)
            * ratio ** (exponent // 2)
            * Fraction(p.c) ** (n - i)
            * u[m] ** i
            * u[m - 1] ** (n - i)
            * w[i + r]
        )
    return identity_report("thm2", {"m": m, "n": n, "r": r}, w[m * n + r], rhs)


def check_even_index_split(
    spec: SeqSpec, m: int, n: int, r: int, corrected: bool = True
) -> IdentityReport:
    """w(2mn+2r) = sum_i C(n,i) (b/a)^((i-parity(i))/2) u(2m)^i u(2m-1)^(n-i) w(i+2r)

    for c = 1. With corrected=False the ratio factor is dropped; that
    variant is wrong whenever a != b and an i >= 2 term is nonzero, and
    is kept as a negative control.
    """
    if spec.params.c != 1:
        raise InvalidParams("even-index split requires c = 1")
    _require_split_indices(m, n, r)
    p = spec.params
    u = prefix_naive(u_spec(p), 2 * m + 1)
    w = prefix_naive(spec, max(2 * m * n + 2 * r, n + 2 * r) + 1)
    ratio = Fraction(p.b, p.a)
    rhs = Fraction(0)
    for i in range(n + 1):
        factor = ratio ** ((i - parity(i)) // 2) if corrected else Fraction(1)
        rhs += comb(n, i) * factor * u[2 * m] ** i * u[2 * m - 1] ** (n - i) * w[i + 2 * r]
    return identity_report(
        "zhang47",
        {"m": m, "n": n, "r": r, "corrected": corrected},
        w[2 * m * n + 2 * r],
        rhs,
    )


def check_companion_split(spec: SeqSpec, m: int, n: int, r: int) -> IdentityReport:
    """w(2mn+r) expanded in powers of the companion term v(m):

        sum_i C(n,i) (-1)^((m+1)(n-i)) (a/b)^(parity(m)(i+parity(i))/2 - parity(im) parity(r))
              c^(m(n-i)) v(m)^i w(im+r)
    """
    _require_split_indices(m, n, r)
    p = spec.params
    v = prefix_naive(v_spec(p), m + 1)
    w = prefix_naive(spec, 2 * m * n + r + 1)
    ratio = Fraction(p.a, p.b)
    rhs = Fraction(0)
    for i in range(n + 1):
        exponent = parity(m) * ((i + parity(i)) // 2) - parity(i * m) * parity(r)
        rhs += (
            comb(n, i)
            * (-1) ** ((m + 1) * (n - i))
            * ratio**exponent
            * Fraction(p.c) ** (m * (n - i))
            * v[m] ** i
            * w[i * m + r]
        )
    return identity_report("thm3", {"m": m, "n": n, "r": r}, w[2 * m * n + r], rhs)


def exponent_forms(m: int, i: int, r: int) -> tuple[int, int]:
    """Two closed forms of the same ratio exponent:

        parity(r+1) parity(m) i + (-1)^(r+1) parity(m) (i - parity(i))/2
        parity(m) (i + parity(i))/2 - parity(im) parity(r)
    """
    if m < 0 or i < 0 or r < 0:
        raise InvalidIndex("m, i and r must be nonnegative")
    left = parity(r + 1) * parity(m) * i + (-1) ** (r + 1) * parity(m) * ((i - parity(i)) // 2)
    right = parity(m) * ((i + parity(i)) // 2) - parity(i * m) * parity(r)
    return left, right


def exponent_forms_agree(m: int, i: int, r: int) -> bool:
    left, right = exponent_forms(m, i, r)
    return left == right


def check_root_identity(
    params: Params, m: int, r: int, root: str = "alpha"
) -> QuadIdentityReport:
    """Ring identity satisfied by either root z of x^2 - abx - abc:

        -(-abc)^(m+r) + a^((r+parity(r))/2) b^((r-parity(r))/2) v(r) (-abc)^m z^r + z^(2(m+r))
            = z^(m+2r) a^((m+parity(m))/2) b^((m-parity(m))/2) v(m)

    Verified as an exact equality of both ring components.
    """
    if m < 1 or r < 1:
        raise InvalidIndex("m and r must be at least 1")
    if root not in ("alpha", "beta"):
        raise InvalidIndex("root must be 'alpha' or 'beta'")
    a, b, c = params.a, params.b, params.c
    alpha, beta = roots(params)
    z = alpha if root == "alpha" else beta
    v = prefix_naive(v_spec(params), max(m, r) + 1)
    abc = a * b * c
    scale_r = a ** ((r + parity(r)) // 2) * b ** ((r - parity(r)) // 2)
    scale_m = a ** ((m + parity(m)) // 2) * b ** ((m - parity(m)) // 2)
    lhs = (
        QuadElement.scalar(-((-abc) ** (m + r)), params.discriminant)
        + (scale_r * v[r] * (-abc) ** m) * z**r
        + z ** (2 * (m + r))
    )
    rhs = z ** (m + 2 * r) * (scale_m * v[m])
    return quad_identity_report("lemma3", {"m": m, "r": r, "root": root}, lhs, rhs)


def check_cross_shift(spec: SeqSpec, n: int, m: int, r: int) -> IdentityReport:
    """Four-term exchange between two ways of advancing the index by m + 2r:

        -(-c)^(m+r) w(n) + (-c)^m (a/b)^(parity(r) parity(n+1)) v(r) w(r+n) + w(2(m+r)+n)
            = (a/b)^(parity(m) parity(n+1)) v(m) w(m+2r+n)
    """
    if n < 1 or m < 1 or r < 1:
        raise InvalidIndex("n, m and r must be at least 1")
    p = spec.params
    w = prefix_naive(spec, max(2 * (m + r) + n, m + 2 * r + n) + 1)
    v = prefix_naive(v_spec(p), max(m, r) + 1)
    ratio = Fraction(p.a, p.b)
    neg_c = Fraction(-p.c)
    lhs = (
        -(neg_c ** (m + r)) * w[n]
        + neg_c**m * ratio ** (parity(r) * parity(n + 1)) * v[r] * w[r + n]
        + w[2 * (m + r) + n]
    )
    rhs = ratio ** (parity(m) * parity(n + 1)) * v[m] * w[m + 2 * r + n]
    return identity_report("thm4", {"n": n, "m": m, "r": r}, lhs, rhs)


def check_cross_shift_special(
    spec: SeqSpec, n: int, variant: str = "direct"
) -> IdentityReport:
    """Window relations among six consecutive terms, for c = 1.

    With D = a^parity(n+1) b^parity(n):
        direct:      (ab + 2) w(n+4) = w(n) + D w(n+1) + w(n+6)
        zhang_form:  (ab + 1) w(n+4) = w(n) + D w(n+1) + D w(n+5)
    """
    if spec.params.c != 1:
        raise InvalidParams("window relations require c = 1")
    if n < 0:
        raise InvalidIndex("n must be nonnegative")
    if variant not in ("direct", "zhang_form"):
        raise InvalidIndex("variant must be 'direct' or 'zhang_form'")
    p = spec.params
    w = prefix_naive(spec, n + 7)
    ab = p.a * p.b
    d_factor = p.a ** parity(n + 1) * p.b ** parity(n)
    if variant == "direct":
        lhs = (ab + 2) * w[n + 4]
        rhs = w[n] + d_factor * w[n + 1] + w[n + 6]
    else:
        lhs = (ab + 1) * w[n + 4]
        rhs = w[n] + d_factor * w[n + 1] + d_factor * w[n + 5]
    return identity_report("thm4-special", {"n": n, "variant": variant}, lhs, rhs)


def compositions(n: int) -> Iterator[tuple[int, int, int]]:
    """All (i, j, s) with i + j + s = n, in lexicographic order on (i, j)."""
    for i in range(n + 1):
        for j in range(n - i + 1):
            yield i, j, n - i - j


def multinomial(n: int, i: int, j: int) -> int:
    """n! / (i! j! (n-i-j)!) as a product of two binomials."""
    return comb(n, i) * comb(n - i, j)


def check_trinomial_split(
    spec: SeqSpec, n: int, m: int, r: int, d: int, form: str = "s3"
) -> IdentityReport:
    """Three-way multinomial expansions over compositions i + j + s = n.

    form="s2":  w((m+2r)n+d) = v(m)^(-n) * sum multinomial(n,i,j) (-1)^s
                (-c)^(mj+(m+r)s) v(r)^j w(2(m+r)i+rj+d)
                (a/b)^(parity(r)(j+parity(j))/2 - parity(m)(n+parity(n))/2
                       - parity(rj) parity(d) + parity(mn) parity(d))

    form="s3":  w(2(m+r)n+d) = sum multinomial(n,i,j) (-1)^j
                (-c)^(s(m+r)+mj) v(m)^i v(r)^j w((m+2r)i+rj+d)
                (a/b)^(parity(m)(i+parity(i))/2 + parity(r)(j+parity(j))/2
                       - parity(mi) parity(rj) - parity(mi+rj) parity(d))

    Indices n, m, r must be positive; d may be zero.
    """
    if n < 1 or m < 1 or r < 1:
        raise InvalidIndex("n, m and r must be at least 1")
    if d < 0:
        raise InvalidIndex("d must be nonnegative")
    if form not in ("s2", "s3"):
        raise InvalidIndex("form must be 's2' or 's3'")
    p = spec.params
    w = prefix_naive(spec, max(2 * (m + r), m + 2 * r) * n + d + 1)
    v = prefix_naive(v_spec(p), max(m, r) + 1)
    ratio = Fraction(p.a, p.b)
    neg_c = Fraction(-p.c)
    name = f"thm5-{form}"
    indices = {"n": n, "m": m, "r": r, "d": d}

    if form == "s2":
        if v[m] == 0:
            raise DegenerateModulus(f"v({m}) = 0, the v(m)^(-n) prefactor is undefined")
        total = Fraction(0)
        for i, j, s in compositions(n):
            exponent = (
                parity(r) * ((j + parity(j)) // 2)
                - parity(m) * ((n + parity(n)) // 2)
                - parity(r * j) * parity(d)
                + parity(m * n) * parity(d)
            )
            total += (
                multinomial(n, i, j)
                * (-1) ** s
                * neg_c ** (m * j + (m + r) * s)
                * v[r] ** j
                * w[2 * (m + r) * i + r * j + d]
                * ratio**exponent
            )
        return identity_report(name, indices, w[(m + 2 * r) * n + d], total / v[m] ** n)

    total = Fraction(0)
    for i, j, s in compositions(n):
        exponent = (
            parity(m) * ((i + parity(i)) // 2)
            + parity(r) * ((j + parity(j)) // 2)
            - parity(m * i) * parity(r * j)
            - parity(m * i + r * j) * parity(d)
        )
        total += (
            multinomial(n, i, j)
            * (-1) ** j
            * neg_c ** (s * (m + r) + m * j)
            * v[m] ** i
            * v[r] ** j
            * w[(m + 2 * r) * i + r * j + d]
            * ratio**exponent
        )
    return identity_report(name, indices, w[2 * (m + r) * n + d], total)
