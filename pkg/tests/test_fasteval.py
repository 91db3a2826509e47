"""Logarithmic-time evaluation and the double-index step identity."""

from fractions import Fraction

import pytest

from bihoradam import (
    Family,
    InvalidIndex,
    Params,
    StepMatrix,
    check_double_step,
    make_spec,
    prefix_naive,
    step_matrix,
    term_fast,
    term_naive,
    u_spec,
    v_spec,
)

F = Fraction

REPRESENTATIVE_SPECS = [
    make_spec(1, 1, 1, Family.U),
    make_spec(1, 1, 1, Family.V),
    make_spec(2, 1, 1, Family.U),
    make_spec(1, 2, 3, Family.U),
    make_spec(4, 4, 3, Family.V),
    make_spec(2, 3, 1, Family.GENERAL, 3, 7),
    make_spec(3, 2, 2, Family.GENERAL, F(1, 2), F(-5, 3)),
    make_spec(-2, 3, 1, Family.GENERAL, 1, 1),
]


def test_step_matrix_entries_and_determinant():
    m = step_matrix(Params(2, 3, 2))
    assert (m.a00, m.a01, m.a10, m.a11) == (10, -4, 1, 0)
    assert m.determinant() == 4


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (2, 3, 1), (1, 2, 3), (-2, 3, 1)])
def test_matrix_power_determinant_is_power_of_c_squared(a, b, c):
    m = step_matrix(Params(a, b, c))
    for e in range(21):
        assert (m**e).determinant() == (c * c) ** e


def test_matrix_power_matches_iterated_product():
    m = step_matrix(Params(2, 1, 1))
    acc = StepMatrix.identity()
    for e in range(12):
        assert m**e == acc
        acc = acc * m


@pytest.mark.parametrize("spec", REPRESENTATIVE_SPECS)
def test_fast_equals_oracle_through_n_2000(spec):
    ref = prefix_naive(spec, 2001)
    for n in range(0, 2001):
        assert term_fast(spec, n) == ref[n]


def test_fast_fibonacci_ninetieth():
    spec = make_spec(1, 1, 1, Family.U)
    assert term_fast(spec, 90) == 2880067194370816120


def test_fast_handles_rational_values():
    spec = make_spec(2, 1, 1, Family.GENERAL, 1, F(1, 2))
    assert term_fast(spec, 5) == term_naive(spec, 5) == F(19, 2)


def test_fast_rejects_negative_index():
    with pytest.raises(InvalidIndex):
        term_fast(make_spec(1, 1, 1, Family.U), -1)


def test_double_step_on_fibonacci():
    # F(n+2k) = L(k) F(n+k) - (-1)^k F(n): 13 = 3*5 - 2 at n=3, k=2
    spec = make_spec(1, 1, 1, Family.U)
    report = check_double_step(spec, 3, 2)
    assert report.equal and report.lhs == 13


def test_double_step_report_shape():
    report = check_double_step(make_spec(2, 1, 1, Family.U), 1, 1)
    assert report.name == "lemma2"
    assert report.indices == {"n": 1, "k": 1}
    assert report.equal


def test_double_step_preconditions():
    spec = make_spec(1, 1, 1, Family.U)
    with pytest.raises(InvalidIndex):
        check_double_step(spec, -1, 1)
    with pytest.raises(InvalidIndex):
        check_double_step(spec, 0, 0)


def test_double_step_dense_small_parameters():
    # full index box on a compact parameter sample; the wide-grid version
    # runs in the acceptance suite
    for a in (1, 2):
        for b in (1, 2):
            for c in (1, 2):
                p = Params(a, b, c)
                for spec in (u_spec(p), v_spec(p), make_spec(a, b, c, Family.GENERAL, 1, 1)):
                    for n in range(0, 51):
                        for k in range(1, 13):
                            assert check_double_step(spec, n, k).equal


def test_double_step_spot_checks_wide_parameters():
    cases = [
        (make_spec(4, 3, 2, Family.GENERAL, 3, 7), 37, 11),
        (make_spec(3, 4, 3, Family.V), 50, 12),
        (make_spec(-2, 3, 1, Family.GENERAL, 2, 5), 24, 9),
    ]
    for spec, n, k in cases:
        assert check_double_step(spec, n, k).equal
