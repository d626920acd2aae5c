from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from orbicasimir import numkernel as nk
from orbicasimir.errors import DomainError

from oracles import bernoulli_akiyama_tanigawa


def tol(offset):
    return nk.tolerance(offset)


def test_default_precision():
    assert nk.DEFAULT_DIGITS == 40
    assert nk.working_digits() == 40


def test_precision_floor():
    with pytest.raises(DomainError):
        nk.set_working_digits(19)
    with pytest.raises(DomainError):
        with nk.precision(10):
            pass


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)),
                                         (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))])
def test_bernoulli_examples(n, expected):
    assert nk.bernoulli_fraction(n) == expected
    assert nk.bernoulli_number(n) == mpf(expected.numerator) / expected.denominator


def test_bernoulli_matches_akiyama_tanigawa():
    for n in range(0, 41):
        assert nk.bernoulli_fraction(n) == bernoulli_akiyama_tanigawa(n), n


def test_bernoulli_odd_vanish():
    assert all(nk.bernoulli_fraction(2 * k + 1) == 0 for k in range(1, 40))


def test_bernoulli_cap():
    nk.bernoulli_number(nk.BERNOULLI_CAP)
    with pytest.raises(DomainError):
        nk.bernoulli_number(nk.BERNOULLI_CAP + 1)
    with pytest.raises(DomainError):
        nk.bernoulli_number(-1)


def test_bernoulli_poly_examples():
    x = mpf("0.37")
    assert nk.bernoulli_poly(1, x) == x - mpf(0.5)
    assert abs(nk.bernoulli_poly(2, mpf(0.5)) + mpf(1) / 12) < tol(1)
    x = mpf("0.3")
    horner = ((x - mpf(1.5)) * x + mpf(0.5)) * x
    assert abs(nk.bernoulli_poly(3, x) - horner) < tol(2)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 8), x=st.fractions(min_value=-3, max_value=3, max_denominator=97))
def test_bernoulli_poly_difference(n, x):
    x = nk.to_real(x)
    diff = nk.bernoulli_poly(n, x + 1) - nk.bernoulli_poly(n, x)
    assert abs(diff - n * x ** (n - 1)) < tol(4) * max(1, abs(x) ** n)


@pytest.mark.parametrize("x, expected", [
    (1, mpf(0)),
    (mpf(0.5), mpmath.log(mpmath.pi) / 2),
    (5, mpmath.log(24)),
])
def test_log_gamma_examples(x, expected):
    assert abs(nk.log_gamma(x) - expected) < tol(2)


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        nk.log_gamma(0)
    with pytest.raises(DomainError):
        nk.log_gamma(-2.5)


@pytest.mark.parametrize("x", ["0.3", "1.7", "6.4"])
def test_log_gamma_recurrence(x):
    x = mpf(x)
    assert abs(nk.log_gamma(x + 1) - nk.log_gamma(x) - mpmath.log(x)) < tol(2)


@pytest.mark.parametrize("x", ["0.3", "1.7", "6.4"])
def test_log_gamma_duplication(x):
    x = mpf(x)
    rhs = nk.log_gamma(x) + nk.log_gamma(x + mpf(0.5)) + (2 * x - 1) * mpmath.log(2) - mpmath.log(mpmath.pi) / 2
    assert abs(nk.log_gamma(2 * x) - rhs) < tol(2)


@pytest.mark.parametrize("x", ["0.001", "0.25", "3.5", "27.1", "1234.5"])
def test_log_gamma_against_mpmath(x):
    x = mpf(x)
    assert abs(nk.log_gamma(x) - mpmath.loggamma(x)) < tol(2) * max(1, abs(mpmath.loggamma(x)))


def test_gamma_real_reflection():
    for x in ["-0.5", "-1.6", "-2.25", "0.7"]:
        x = mpf(x)
        assert abs(nk.gamma_real(x) - mpmath.gamma(x)) < tol(3) * abs(mpmath.gamma(x))
    with pytest.raises(DomainError):
        nk.gamma_real(-2)


@pytest.mark.parametrize("x", ["0.3", "2.9", "17.25"])
def test_log_gamma_precision_stability(x):
    lo = nk.log_gamma(mpf(x))
    with mp.workdps(80):
        hi = nk.log_gamma(mpf(x))
    assert abs(lo - hi) <= mpf(10) ** -36 * max(1, abs(hi))
