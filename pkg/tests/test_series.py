import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.cyclo import cyclo_context
from supercong.errors import InvalidR, NonInvertibleDenominator, PoleEncountered
from supercong.oracle import exact_rhs_sum, exact_sum_reduce, exact_weighted_sum
from supercong.padic import context_new
from supercong.series import (
    SeriesSpec,
    finite_rhs_sum,
    pochhammer,
    truncated_f,
    weighted_sum_6,
    weighted_sum_10,
)


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 2), 0) == 1
    assert pochhammer(Fraction(1), 5) == math.factorial(5)
    assert pochhammer(Fraction(1, 3), 2) == Fraction(4, 9)
    ctx = context_new(7, 3)
    assert pochhammer(ctx(1), 6) == 720
    with pytest.raises(ValueError):
        pochhammer(Fraction(1), -1)


def test_pochhammer_in_cyclotomic_ring():
    cc = cyclo_context(7, 3, 5)
    assert pochhammer(cc.zeta, 2) == cc.zeta * (cc.zeta + 1)


def test_truncated_f_zero_index():
    assert truncated_f(SeriesSpec([Fraction(1, 2)], [Fraction(1, 3)], 5, 0)) == 1


def test_truncated_f_terminates_at_negative_integer():
    spec = SeriesSpec([-2, Fraction(1, 2)], [Fraction(3, 2)], 1, 50)
    # 1 + (-2)(1/2)/(3/2) + (-2)(-1)(1/2)(3/2)/((3/2)(5/2) 2!)
    assert truncated_f(spec) == 1 - Fraction(2, 3) + Fraction(1, 5)


def test_truncated_f_matches_direct_sum():
    numer, denom = [Fraction(1, 3), Fraction(2, 5)], [Fraction(7, 4)]
    direct = sum(
        pochhammer(numer[0], k) * pochhammer(numer[1], k) / (pochhammer(denom[0], k) * math.factorial(k))
        for k in range(8)
    )
    for simplify in (True, False):
        assert truncated_f(SeriesSpec(numer, denom, 1, 7, simplify)) == direct


def test_well_poised_pair_is_equivalent():
    t = Fraction(2, 7)
    spec = [t, 1 + t / 2, Fraction(1, 5)], [t / 2, Fraction(9, 4)]
    a = truncated_f(SeriesSpec(*spec, z=1, n=6, simplify=True))
    b = truncated_f(SeriesSpec(*spec, z=1, n=6, simplify=False))
    assert a == b


def test_pole_and_noninvertible():
    with pytest.raises(PoleEncountered):
        truncated_f(SeriesSpec([1], [-1], 1, 3))
    with pytest.raises(NonInvertibleDenominator):
        truncated_f(SeriesSpec([1], [1], 1, 6), context_new(5, 2))
    with pytest.raises(NonInvertibleDenominator):
        truncated_f(SeriesSpec([Fraction(1, 5)], [1], 1, 2), context_new(5, 2))


def test_weighted_sum_examples():
    ctx = context_new(5, 6)
    assert weighted_sum_6(ctx, 1, 4) == exact_sum_reduce(ctx, exact_weighted_sum("cubic", 1, 4))
    assert weighted_sum_10(context_new(7, 5), -3, 0) == -3
    assert weighted_sum_10(Fraction, 1, 0) == 1


def test_invalid_r():
    for bad in (3, 0, 2, -3):
        with pytest.raises(InvalidR):
            weighted_sum_6(Fraction, bad, 2)
    for bad in (2, 5, -5, 3, 0):
        with pytest.raises(InvalidR):
            weighted_sum_10(Fraction, bad, 2)


def test_finite_rhs_examples():
    assert finite_rhs_sum(Fraction, "cubic", 1) == 1
    assert finite_rhs_sum(Fraction, "quintic", 1) == 1
    # k runs over 0..1-r = 0..2 for r = -1
    two_terms = 1 + Fraction(-2) * Fraction(-1, 3) ** 3 / Fraction(-2, 3) ** 3
    third = Fraction(-2 * -1) * (Fraction(-1, 3) * Fraction(2, 3)) ** 3 / ((Fraction(-2, 3) * Fraction(1, 3)) ** 3 * 2)
    assert finite_rhs_sum(Fraction, "cubic", -1) == two_terms + third == Fraction(7, 4)
    assert finite_rhs_sum(Fraction, "quintic", -1) == 1 + Fraction(-1) * Fraction(-1, 5) ** 3 / (
        Fraction(-2, 5) ** 2 * Fraction(1, 5)
    )
    with pytest.raises(ValueError):
        finite_rhs_sum(Fraction, "sextic", 1)


CUBIC_R = st.integers(-20, 1).filter(lambda r: r % 3)
QUINTIC_R = st.integers(-20, 1).filter(lambda r: r % 2 and r % 5)


@given(CUBIC_R, st.integers(0, 12))
def test_weighted_6_against_oracle(r, upper):
    assert weighted_sum_6(Fraction, r, upper) == exact_weighted_sum("cubic", r, upper)


@given(QUINTIC_R, st.integers(0, 12))
def test_weighted_10_against_oracle(r, upper):
    assert weighted_sum_10(Fraction, r, upper) == exact_weighted_sum("quintic", r, upper)


@given(CUBIC_R, QUINTIC_R)
def test_finite_rhs_against_oracle(rc, rq):
    assert finite_rhs_sum(Fraction, "cubic", rc) == exact_rhs_sum("cubic", rc)
    assert finite_rhs_sum(Fraction, "quintic", rq) == exact_rhs_sum("quintic", rq)


@given(st.sampled_from([7, 11, 13, 17]), CUBIC_R)
def test_modular_matches_exact_reduction(p, r):
    ctx = context_new(p, 6)
    upper = p - 1
    try:
        exact = exact_sum_reduce(ctx, exact_weighted_sum("cubic", r, upper))
    except ValueError:
        with pytest.raises(NonInvertibleDenominator):
            weighted_sum_6(ctx, r, upper)
        return
    assert weighted_sum_6(ctx, r, upper) == exact
