from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from orbicasimir import numkernel as nk
from orbicasimir.barnes import barnes_zeta2, barnes_zeta2_ds, gen_bernoulli_b32, residue_weights
from orbicasimir.errors import DomainError
from orbicasimir.hurwitz import hurwitz_zeta
from orbicasimir.oracle.lattice import brute_barnes_sum

from oracles import central_difference

ZETA3 = mpf("1.202056903159594285399738161511449990764986")


def tol(offset):
    return nk.tolerance(offset)


def test_weights_two_three():
    ws = residue_weights(1, 2, 3)
    assert [(r.j, r.k) for r in ws] == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    # w_jk = gamma/6 + j/3 + k/2
    expected = [Fraction(1, 6) + Fraction(j, 3) + Fraction(k, 2) for j in range(3) for k in range(2)]
    assert expected == [Fraction(1, 6), Fraction(2, 3), Fraction(1, 2), Fraction(1), Fraction(5, 6), Fraction(4, 3)]
    for r, e in zip(ws, expected):
        assert abs(r.w - nk.to_real(e)) < tol(1)


def test_weights_trivial_and_enumerated():
    ws = residue_weights(1, 1, 1)
    assert len(ws) == 1 and ws[0].w == 1
    ws = residue_weights(6, 2, 5)
    assert len(ws) == 10
    for r in ws:
        assert 0 <= r.j < 5 and 0 <= r.k < 2
        assert abs(r.w - mpf(6 + 2 * r.j + 5 * r.k) / 10) < tol(1)


@given(alpha=st.integers(1, 9), beta=st.integers(1, 9))
def test_weight_count(alpha, beta):
    assert len(residue_weights(1, alpha, beta)) == alpha * beta


def test_period_validation():
    with pytest.raises(DomainError):
        residue_weights(1, 0, 3)
    with pytest.raises(DomainError):
        barnes_zeta2(3, 1, 2.5, 3)
    with pytest.raises(DomainError):
        barnes_zeta2(3, 0, 2, 3)
    for s in (1, 2, 2 + mpf("5e-7")):
        with pytest.raises(DomainError):
            barnes_zeta2(s, 1, 2, 3)


def test_closed_form_examples():
    assert gen_bernoulli_b32(1, 1, 1) == 0
    assert abs(gen_bernoulli_b32(1, 2, 3) - mpf(1) / 24) < tol(1)
    for a, b in [(2, 3), (2, 7), (5, 4)]:
        assert abs(gen_bernoulli_b32(mpf(a + b) / 2, a, b)) < tol(1)


def test_value_examples():
    assert abs(barnes_zeta2(-1, 1, 1, 1)) < tol(3)
    # (2 - 9)(2(1 - 9) + 14) / (24 * 14) = 1/24
    assert abs(barnes_zeta2(-1, 1, 2, 7) - mpf(1) / 24) < tol(4)
    assert abs(barnes_zeta2(-1, 1, 2, 3) - mpf(1) / 24) < tol(4)


def test_reduces_to_riemann():
    # zeta_B2(s, 1 | 1, 1) = zeta_R(s - 1)
    for s in ("3", "-1.5", "0.25"):
        s = mpf(s)
        assert abs(barnes_zeta2(s, 1, 1, 1) - hurwitz_zeta(s - 1, 1)) < tol(4) * max(1, abs(hurwitz_zeta(s - 1, 1)))


CLOSED_FORM_CASES = [(1, 2, p) for p in range(2, 10)] + [(1 + p, 2, p) for p in range(2, 10)] + [(1, 1, 1)]


@pytest.mark.parametrize("gamma, alpha, beta", CLOSED_FORM_CASES)
def test_closed_form_agreement(gamma, alpha, beta):
    assert abs(barnes_zeta2(-1, gamma, alpha, beta) - gen_bernoulli_b32(gamma, alpha, beta)) <= tol(6)


@settings(max_examples=50, deadline=None)
@given(alpha=st.integers(1, 12), beta=st.integers(1, 12), frac=st.fractions(0, 1, max_denominator=1000))
def test_complement_antisymmetry(alpha, beta, frac):
    gamma = nk.to_real(frac) * (alpha + beta)
    if gamma <= 0 or gamma >= alpha + beta:
        return
    total = gen_bernoulli_b32(gamma, alpha, beta) + gen_bernoulli_b32(alpha + beta - gamma, alpha, beta)
    assert abs(total) < tol(4) * (alpha + beta) ** 2


@pytest.mark.parametrize("s", ["-1", "-0.5", "0.3", "3"])
@pytest.mark.parametrize("alpha, beta", [(2, 3), (2, 7), (3, 4)])
def test_swap_symmetry(s, alpha, beta):
    s = mpf(s)
    a = barnes_zeta2(s, 1, alpha, beta)
    b = barnes_zeta2(s, 1, beta, alpha)
    assert abs(a - b) < tol(5) * max(1, abs(a))


def test_derivative_at_minus_one_trivial_periods():
    # zeta_B2(s, 1|1,1) = zeta_R(s-1) so the derivative is zeta_R'(-2) = -zeta(3)/(4 pi^2)
    assert abs(barnes_zeta2_ds(-1, 1, 1, 1) + ZETA3 / (4 * mpmath.pi**2)) < tol(4)


@pytest.mark.parametrize("s, gamma, alpha, beta", [(-1, 1, 2, 2), (-1, 3, 2, 5), ("0.2", 1, 2, 3)])
def test_derivative_finite_difference(s, gamma, alpha, beta):
    h = mpf(10) ** (-(nk.working_digits() // 4))
    fd = central_difference(lambda x: barnes_zeta2(x, gamma, alpha, beta), s, h)
    exact = barnes_zeta2_ds(s, gamma, alpha, beta)
    assert abs(fd - exact) <= h * max(1, abs(exact))


@pytest.mark.parametrize("s", ["2.5", "3", "4"])
@pytest.mark.parametrize("gamma, alpha, beta", [(1, 2, 3), (1, 2, 7), (3, 1, 2)])
def test_brute_force_equivalence(s, gamma, alpha, beta):
    enc = brute_barnes_sum(s, gamma, alpha, beta, cutoff=1500)
    value = barnes_zeta2(s, gamma, alpha, beta)
    assert enc.contains(value)
    assert abs(value - enc.value) <= mpf("1e-12")


def test_derivative_brute_force():
    enc = brute_barnes_sum(3, 1, 2, 3, cutoff=4000, log_power=1)
    assert enc.contains(-barnes_zeta2_ds(3, 1, 2, 3))
    assert enc.bound < mpf("1e-12")


@pytest.mark.parametrize("args", [(-1, 1, 2, 3), (-1, 4, 2, 3), ("-2.5", 1, 3, 5)])
def test_precision_stability(args):
    lo = (barnes_zeta2(*args), barnes_zeta2_ds(*args))
    with mp.workdps(80):
        hi = (barnes_zeta2(mpf(args[0]), *args[1:]), barnes_zeta2_ds(mpf(args[0]), *args[1:]))
    for a, b in zip(lo, hi):
        assert abs(a - b) <= mpf(10) ** -36 * max(1, abs(b))
