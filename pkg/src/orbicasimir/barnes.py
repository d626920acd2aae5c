"""Two-dimensional Barnes zeta function with positive-integer periods.

Splitting m = beta*N + j and n = alpha*M + k turns the lattice sum

    zeta_B2(s, gamma | alpha, beta) = sum_{m,n>=0} (gamma + alpha*m + beta*n)^-s

into alpha*beta single sums over nu = M + N, each carrying multiplicity nu+1:

    zeta_B2 = (alpha*beta)^-s * sum_{j,k} [zeta_H(s-1, w_jk) + (1 - w_jk) zeta_H(s, w_jk)]
    w_jk    = (gamma + alpha*j + beta*k) / (alpha*beta)
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral

import mpmath
from mpmath import mp, mpf

from .errors import DomainError
from .hurwitz import POLE_EXCLUSION, class_pair
from .numkernel import GUARD_DIGITS, to_real


@dataclass(frozen=True)
class ResidueClassWeight:
    j: int
    k: int
    w: mpf


def _check_periods(alpha, beta) -> tuple[int, int]:
    for name, v in (("alpha", alpha), ("beta", beta)):
        if isinstance(v, bool) or not isinstance(v, Integral):
            if isinstance(v, float) and v.is_integer():
                continue
            raise DomainError(f"period {name} must be a positive integer, got {v!r}")
        if v < 1:
            raise DomainError(f"period {name} must be >= 1, got {v}")
    return int(alpha), int(beta)


def _check_args(s: mpf, gamma: mpf) -> None:
    if gamma <= 0:
        raise DomainError(f"Barnes parameter gamma must be positive, got {mpmath.nstr(gamma, 10)}")
    for pole in (1, 2):
        if abs(s - pole) <= POLE_EXCLUSION:
            raise DomainError(f"s={mpmath.nstr(s, 10)} lies in the Barnes pole exclusion zone around {pole}")


def residue_weights(gamma, alpha: int, beta: int) -> list[ResidueClassWeight]:
    """Hurwitz shifts of the residue classes, ordered by (j, k)."""
    alpha, beta = _check_periods(alpha, beta)
    gamma = to_real(gamma)
    if gamma <= 0:
        raise DomainError(f"Barnes parameter gamma must be positive, got {mpmath.nstr(gamma, 10)}")
    ab = alpha * beta
    return [
        ResidueClassWeight(j, k, (gamma + alpha * j + beta * k) / ab)
        for j in range(beta)
        for k in range(alpha)
    ]


def _class_sum(s: mpf, gamma: mpf, alpha: int, beta: int, deriv: bool) -> tuple[mpf, mpf]:
    """F(s) = sum_jk [zeta_H(s-1, w) + (1-w) zeta_H(s, w)] and F'(s), summed in (j, k) order."""
    total = mpf(0)
    dtotal = mpf(0)
    for rw in residue_weights(gamma, alpha, beta):
        g, dg = class_pair(s, rw.w, deriv)
        total += g
        dtotal += dg
    return total, dtotal


def barnes_zeta2(s, gamma, alpha: int, beta: int) -> mpf:
    """zeta_B2(s, gamma | alpha, beta) continued to real s away from 1 and 2."""
    alpha, beta = _check_periods(alpha, beta)
    s, gamma = to_real(s), to_real(gamma)
    _check_args(s, gamma)
    with mp.extradps(GUARD_DIGITS):
        f, _ = _class_sum(s, gamma, alpha, beta, deriv=False)
        result = mpf(alpha * beta) ** (-s) * f
    return +result


def barnes_zeta2_ds(s, gamma, alpha: int, beta: int) -> mpf:
    """d/ds zeta_B2(s, gamma | alpha, beta)."""
    alpha, beta = _check_periods(alpha, beta)
    s, gamma = to_real(s), to_real(gamma)
    _check_args(s, gamma)
    with mp.extradps(GUARD_DIGITS):
        f, df = _class_sum(s, gamma, alpha, beta, deriv=True)
        ab = mpf(alpha * beta)
        result = ab ** (-s) * (df - mpmath.log(ab) * f)
    return +result


def gen_bernoulli_b32(gamma, alpha, beta) -> mpf:
    """zeta_B2(-1, gamma | alpha, beta) = B_3^(2)(gamma | alpha, beta) / (6 alpha beta), in closed form."""
    gamma, alpha, beta = to_real(gamma), to_real(alpha), to_real(beta)
    if gamma <= 0 or alpha <= 0 or beta <= 0:
        raise DomainError("gen_bernoulli_b32 needs positive gamma, alpha, beta")
    return (2 * gamma - alpha - beta) * (2 * gamma * (gamma - alpha - beta) + alpha * beta) / (24 * alpha * beta)
