"""Brute-force Barnes lattice sums with rigorous enclosures.

The square m, n <= cutoff is summed in binary floating point (numba kernel or
numpy fallback).  Everything outside the square is enclosed by Euler-Maclaurin
expansions whose remainder is bounded by the first omitted term: for a summand
whose even derivatives keep one sign, the truncation error has the sign of,
and is smaller than, the next correction.  Powers (c + b n)^-s are completely
monotone; the log-weighted variant used for s-derivatives is checked to keep
the required signs before its enclosure is trusted.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import mpmath
import numpy as np
from mpmath import mp, mpf

from .. import _accel
from ..barnes import _check_periods
from ..errors import ConvergenceError, DomainError
from ..hurwitz import _em_coefficients
from ..numkernel import to_real

TAIL_DIGITS = 34
MAX_TAIL_TERMS = 30
_EPS = np.finfo(np.float64).eps
_ROW_BLOCK = 256


class LatticeBracket(NamedTuple):
    """Enclosure value +- bound of a lattice sum; ``partial`` is the raw square sum."""

    value: mpf
    bound: mpf
    partial: mpf

    @property
    def lo(self) -> mpf:
        return self.value - self.bound

    @property
    def hi(self) -> mpf:
        return self.value + self.bound

    def contains(self, x) -> bool:
        return self.lo <= to_real(x) <= self.hi


# --- square partial sums -------------------------------------------------------------------------

@_accel.njit
def _rows_numba(gamma, alpha, beta, s, log_power, cutoff):
    rows = np.empty(cutoff + 1)
    absrows = np.empty(cutoff + 1)
    # integer exponents avoid libm pow, which dominates the loop otherwise
    k = int(s)
    integral = k == s and 0 < k < 64
    for m in range(cutoff + 1):
        base = gamma + alpha * m
        acc = 0.0
        comp = 0.0
        aacc = 0.0
        for n in range(cutoff + 1):
            d = base + beta * n
            if integral:
                v = (1.0 / d) ** k
            else:
                v = d ** (-s)
            if log_power:
                v *= math.log(d)
            # Kahan compensated summation
            y = v - comp
            tot = acc + y
            comp = (tot - acc) - y
            acc = tot
            aacc += abs(v)
        rows[m] = acc
        absrows[m] = aacc
    return rows, absrows


def _rows_numpy(gamma, alpha, beta, s, log_power, cutoff):
    n = np.arange(cutoff + 1, dtype=np.float64) * beta
    rows = np.empty(cutoff + 1)
    absrows = np.empty(cutoff + 1)
    for start in range(0, cutoff + 1, _ROW_BLOCK):
        m = np.arange(start, min(start + _ROW_BLOCK, cutoff + 1), dtype=np.float64)
        d = (gamma + alpha * m)[:, None] + n[None, :]
        v = d ** (-s)
        if log_power:
            v *= np.log(d)
        rows[start:start + len(m)] = v.sum(axis=1)
        absrows[start:start + len(m)] = np.abs(v).sum(axis=1)
    return rows, absrows


def lattice_rows(gamma: float, alpha: float, beta: float, s: float, log_power: int, cutoff: int,
                 backend: str | None = None):
    """Row sums sum_{n<=cutoff} f(m, n) for m = 0..cutoff, with f = ln(d)^log_power d^-s."""
    if backend is None:
        backend = "numba" if _accel.USE_NUMBA else "numpy"
    if backend == "numba":
        return _rows_numba(float(gamma), float(alpha), float(beta), float(s), int(log_power), int(cutoff))
    if backend == "numpy":
        return _rows_numpy(float(gamma), float(alpha), float(beta), float(s), int(log_power), int(cutoff))
    raise ValueError(f"unknown backend {backend!r}")


# --- interval helpers ------------------------------------------------------------------------------

def _iscale(c: mpf, iv: tuple[mpf, mpf]) -> tuple[mpf, mpf]:
    a, b = c * iv[0], c * iv[1]
    return (a, b) if a <= b else (b, a)


def _iadd(*ivs: tuple[mpf, mpf]) -> tuple[mpf, mpf]:
    return (mpmath.fsum(iv[0] for iv in ivs), mpmath.fsum(iv[1] for iv in ivs))


def _falling(a: mpf, k: int) -> tuple[mpf, mpf]:
    """a(a-1)...(a-k+1) and its derivative in a."""
    val, dval = mpf(1), mpf(0)
    for i in range(k):
        dval = dval * (a - i) + val
        val = val * (a - i)
    return val, dval


def _power_integral(sigma: mpf, ell: int, u0: mpf, b: mpf) -> mpf:
    """int_{x0}^inf u^-sigma ln(u)^ell dx with u = u0 + b (x - x0)."""
    t = u0 ** (1 - sigma)
    if ell == 0:
        return t / (b * (sigma - 1))
    return (t * mpmath.log(u0) / (sigma - 1) + t / (sigma - 1) ** 2) / b


def _deriv_at(sigma: mpf, ell: int, u0: mpf, b: mpf, k: int) -> mpf:
    """k-th x-derivative of u^-sigma ln(u)^ell at u = u0, u = c + b x."""
    fk, dfk = _falling(-sigma, k)
    base = b**k * u0 ** (-sigma - k)
    if ell == 0:
        return fk * base
    return (fk * mpmath.log(u0) + dfk) * base


def _check_log_signs(sigma: mpf, u0: mpf, kmax: int) -> None:
    # d^k(u^-sigma ln u) = u^(-sigma-k) [F_k ln u + F_k'], F_k = falling(-sigma, k);
    # the sign is that of F_k while ln u exceeds sum_{i<k} 1/(sigma+i)
    need = mpmath.fsum(1 / (sigma + i) for i in range(kmax + 4))
    if mpmath.log(u0) <= need:
        raise ConvergenceError("log-weighted tail too close to the origin for a signed Euler-Maclaurin bound")


def _em_interval(value_at, integral: tuple[mpf, mpf], deriv_at, scale: mpf) -> tuple[mpf, mpf]:
    """Euler-Maclaurin enclosure of sum_{x>=x0} g(x) from interval-valued g(x0), g^(k)(x0), integral."""
    coeffs = _em_coefficients()
    g0 = value_at()
    est = _iadd(integral, _iscale(mpf(0.5), g0))
    tol = scale * mpf(10) ** (-(TAIL_DIGITS - 4))
    for j in range(1, MAX_TAIL_TERMS + 1):
        term = _iscale(-coeffs[j], deriv_at(2 * j - 1))
        if max(abs(term[0]), abs(term[1])) < tol:
            # remainder lies between 0 and this (first omitted) term
            lo = min(mpf(0), term[0])
            hi = max(mpf(0), term[1])
            return est[0] + lo, est[1] + hi
        est = _iadd(est, term)
    raise ConvergenceError("Euler-Maclaurin enclosure did not settle")


def sum_enclosure(sigma, ell: int, c, b, n0: int) -> tuple[mpf, mpf]:
    """Enclose sum_{n>=n0} (c + b n)^-sigma ln(c + b n)^ell for sigma > 1."""
    sigma, c, b = to_real(sigma), to_real(c), to_real(b)
    u0 = c + b * n0
    if ell:
        _check_log_signs(sigma, u0, 2 * MAX_TAIL_TERMS + 2)
    integral = _power_integral(sigma, ell, u0, b)
    g0 = _deriv_at(sigma, ell, u0, b, 0)
    return _em_interval(
        lambda: (g0, g0),
        (integral, integral),
        lambda k: (lambda v: (v, v))(_deriv_at(sigma, ell, u0, b, k)),
        abs(integral) + abs(g0),
    )


def _column_tail(s: mpf, ell: int, gamma: mpf, alpha: int, beta: int, m0: int) -> tuple[mpf, mpf]:
    """Enclose sum_{m>=m0} h(m), h(m) = sum_{n>=0} f(m, n), by Euler-Maclaurin in m.

    Every ingredient of the outer expansion is itself a single sum over n, enclosed
    by ``sum_enclosure``.
    """
    c0 = gamma + alpha * m0
    a_ = mpf(alpha)
    if ell:
        _check_log_signs(s, c0, 2 * MAX_TAIL_TERMS + 2)
        # int_{m0}^inf f dm = sum_n (1/alpha)[u^(1-s) ln u/(s-1) + u^(1-s)/(s-1)^2]
        integral = _iadd(
            _iscale(1 / (a_ * (s - 1)), sum_enclosure(s - 1, 1, c0, beta, 0)),
            _iscale(1 / (a_ * (s - 1) ** 2), sum_enclosure(s - 1, 0, c0, beta, 0)),
        )
    else:
        integral = _iscale(1 / (a_ * (s - 1)), sum_enclosure(s - 1, 0, c0, beta, 0))

    def h_deriv(k: int) -> tuple[mpf, mpf]:
        fk, dfk = _falling(-s, k)
        scale = a_**k
        if ell == 0:
            return _iscale(scale * fk, sum_enclosure(s + k, 0, c0, beta, 0))
        return _iadd(
            _iscale(scale * fk, sum_enclosure(s + k, 1, c0, beta, 0)),
            _iscale(scale * dfk, sum_enclosure(s + k, 0, c0, beta, 0)),
        )

    return _em_interval(lambda: h_deriv(0), integral, h_deriv, abs(integral[1]))


def brute_barnes_sum(s, gamma, alpha: int, beta: int, cutoff: int, log_power: int = 0,
                     backend: str | None = None) -> LatticeBracket:
    """Enclose sum_{m,n>=0} ln(d)^log_power d^-s, d = gamma + alpha m + beta n, for s > 2.

    With ``log_power=0`` this is the Barnes lattice sum itself; ``log_power=1``
    gives minus its s-derivative.
    """
    alpha, beta = _check_periods(alpha, beta)
    s, gamma = to_real(s), to_real(gamma)
    if s <= 2 + mpf("1e-3"):
        raise DomainError(f"direct lattice summation needs s > 2, got s={mpmath.nstr(s, 10)}")
    if gamma <= 0:
        raise DomainError("gamma must be positive")
    if cutoff < 100:
        raise DomainError("cutoff must be >= 100")
    if log_power not in (0, 1):
        raise DomainError("log_power must be 0 or 1")

    rows, absrows = lattice_rows(float(gamma), alpha, beta, float(s), log_power, cutoff, backend)
    partial = math.fsum(rows.tolist())
    magnitude = math.fsum(absrows.tolist())
    # per-row summation (<= 256 eps), libm pow/log (a few ulp each) and the float image of gamma
    rounding = (256 + 4 * (float(s) + 2)) * _EPS * magnitude
    if float(gamma) != gamma:
        rounding += float(s) * _EPS * magnitude

    with mp.workdps(TAIL_DIGITS):
        s_, g_ = +s, +gamma
        inner = (mpf(0), mpf(0))
        lo_parts, hi_parts = [], []
        for m in range(cutoff + 1):
            lo, hi = sum_enclosure(s_, log_power, g_ + alpha * m, beta, cutoff + 1)
            lo_parts.append(lo)
            hi_parts.append(hi)
        inner = (mpmath.fsum(lo_parts), mpmath.fsum(hi_parts))
        outer = _column_tail(s_, log_power, g_, alpha, beta, cutoff + 1)
        lo = mpf(partial) - rounding + inner[0] + outer[0]
        hi = mpf(partial) + rounding + inner[1] + outer[1]
    center = (lo + hi) / 2
    return LatticeBracket(+center, +(hi - lo) / 2, mpf(partial))
