"""Exact arithmetic in Q[t]/(t^2 - delta)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihoradam import Params, QuadElement, ZeroDivisorError, roots

F = Fraction


def test_scalar_embedding_and_str():
    p = QuadElement.scalar(F(3, 2), 5)
    assert p.x == F(3, 2) and p.y == 0 and p.delta == 5
    assert str(QuadElement(F(1, 2), F(-3), 5)) == "1/2 + -3*t"


def test_construction_rejects_zero_delta():
    with pytest.raises(ValueError):
        QuadElement(F(1), F(1), 0)


def test_mixed_delta_operands_rejected():
    p = QuadElement(F(1), F(1), 5)
    q = QuadElement(F(1), F(1), 7)
    with pytest.raises(ValueError, match="mismatched discriminants"):
        p + q
    with pytest.raises(ValueError, match="mismatched discriminants"):
        p * q


def test_ring_operations_with_rational_scalars():
    p = QuadElement(F(1), F(2), 5)
    assert p + 1 == QuadElement(F(2), F(2), 5)
    assert 1 + p == QuadElement(F(2), F(2), 5)
    assert p - F(1, 2) == QuadElement(F(1, 2), F(2), 5)
    assert F(1, 2) - p == QuadElement(F(-1, 2), F(-2), 5)
    assert 3 * p == QuadElement(F(3), F(6), 5)
    assert p / 2 == QuadElement(F(1, 2), F(1), 5)
    assert -p == QuadElement(F(-1), F(-2), 5)


def test_multiplication_reduces_t_square():
    # (1 + t)(2 + 3t) = 2 + 5t + 3 t^2 = 2 + 3*delta + 5t
    p = QuadElement(F(1), F(1), 5)
    q = QuadElement(F(2), F(3), 5)
    assert p * q == QuadElement(F(17), F(5), 5)


def test_golden_ratio_tenth_power():
    # alpha = (1 + t)/2 with t^2 = 5; alpha^10 = (123 + 55 t)/2
    alpha = QuadElement(F(1, 2), F(1, 2), 5)
    tenth = alpha**10
    assert tenth == QuadElement(F(123, 2), F(55, 2), 5)


def test_inverse_of_pure_root():
    t = QuadElement(F(0), F(1), 5)
    assert t.inverse() == QuadElement(F(0), F(1, 5), 5)
    assert t * t.inverse() == QuadElement.scalar(F(1), 5)


def test_zero_norm_element_has_no_inverse():
    # norm(3 + t) = 9 - 9 = 0 when t^2 = 9
    p = QuadElement(F(3), F(1), 9)
    assert p.norm() == 0
    with pytest.raises(ZeroDivisorError):
        p.inverse()
    with pytest.raises(ZeroDivisorError):
        1 / p


def test_negative_power_is_power_of_inverse():
    p = QuadElement(F(2), F(1), 5)
    assert p**-3 == (p.inverse()) ** 3
    assert p**-3 * p**3 == QuadElement.scalar(F(1), 5)


def test_norm_is_product_with_conjugate():
    p = QuadElement(F(3, 4), F(-2, 7), 13)
    prod = p * p.conjugate()
    assert prod.y == 0
    assert prod.x == p.norm()


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (2, 1, 1), (1, 2, 3), (-3, 2, 5), (2, -3, 1)])
def test_root_relations(a, b, c):
    params = Params(a, b, c)
    alpha, beta = roots(params)
    ab = a * b
    assert alpha + beta == QuadElement.scalar(F(ab), params.discriminant)
    assert alpha * beta == QuadElement.scalar(F(-ab * c), params.discriminant)
    assert alpha - beta == QuadElement(F(0), F(1), params.discriminant)


def test_exactness_at_large_scale():
    # 256-bit inputs survive a pow round trip without precision loss
    big = 2**256 + 1
    p = QuadElement(F(big, 3), F(1, big), 7)
    q = p**5
    step = QuadElement.scalar(F(1), 7)
    for _ in range(5):
        step = step * p
    assert q == step
    assert q * p**-5 == QuadElement.scalar(F(1), 7)


small_rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
)


@given(x=small_rationals, y=small_rationals, m=st.integers(0, 32), n=st.integers(0, 32))
@settings(max_examples=60, deadline=None)
def test_power_is_iterated_multiplication(x, y, m, n):
    p = QuadElement(x, y, 5)
    assert p ** (m + n) == p**m * p**n


@given(x=small_rationals, y=small_rationals)
@settings(max_examples=60, deadline=None)
def test_inverse_round_trip(x, y):
    p = QuadElement(x, y, 5)
    if p.norm() == 0:
        with pytest.raises(ZeroDivisorError):
            p.inverse()
    else:
        assert p * p.inverse() == QuadElement.scalar(F(1), 5)


@given(
    x1=small_rationals, y1=small_rationals,
    x2=small_rationals, y2=small_rationals,
)
@settings(max_examples=60, deadline=None)
def test_conjugation_is_ring_homomorphism(x1, y1, x2, y2):
    p = QuadElement(x1, y1, 5)
    q = QuadElement(x2, y2, 5)
    assert (p * q).conjugate() == p.conjugate() * q.conjugate()
    assert (p + q).conjugate() == p.conjugate() + q.conjugate()
