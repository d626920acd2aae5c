"""Hurwitz zeta function and its s-derivative by Euler-Maclaurin summation.

    zeta_H(s, w) = sum_{k<N} (w+k)^-s + a^(1-s)/(s-1) + a^-s/2
                   + sum_{j>=1} B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1),   a = w+N

The derivative differentiates each term analytically.  The rising product
and its s-derivative are carried together, so a vanishing factor s+i at a
non-positive integer s gives the exact limit rather than a 0/0 ratio.
"""
from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError
from .numkernel import GUARD_DIGITS, bernoulli_number, to_real, working_digits

POLE_EXCLUSION = mpf("1e-6")
MAX_EM_TERMS = 80

_em_coeffs: dict[int, list[mpf]] = {}


def _check(s: mpf, w: mpf) -> None:
    if w <= 0:
        raise DomainError(f"Hurwitz shift must be positive, got w={mpmath.nstr(w, 10)}")
    if abs(s - 1) <= POLE_EXCLUSION:
        raise DomainError(f"s={mpmath.nstr(s, 10)} lies in the pole exclusion zone around s=1")


def _shift_count(s: mpf, w: mpf, digits: int) -> int:
    floor_a = max(15.0, 2 * abs(float(s)), 0.9 * digits)
    return max(0, math.ceil(floor_a - float(w)))


def _em_tail(s: mpf, a: mpf, log_a: mpf, deriv: bool, scale: mpf, dscale: mpf) -> tuple[mpf, mpf]:
    """sum_{k>=0} (a+k)^-s without the finite part: integral, half-term and Bernoulli corrections."""
    digits = working_digits() - GUARD_DIGITS
    a_ms = mpmath.exp(-s * log_a)
    val = a * a_ms / (s - 1) + a_ms / 2
    dval = mpf(0)
    if deriv:
        dval = -log_a * a * a_ms / (s - 1) - a * a_ms / (s - 1) ** 2 - log_a * a_ms / 2
    scale = scale + abs(val) + mpf(10) ** (-working_digits())
    dscale = dscale + abs(dval) + mpf(10) ** (-working_digits())
    tol = mpf(10) ** (-(digits + 5))

    # rising product P = s(s+1)...(s+2j-2) and dP/ds
    poch, dpoch = s, mpf(1)
    apow = a_ms / a  # a^(-s-1)
    inv_a2 = 1 / (a * a)
    prev = None
    coeffs = _em_coefficients()
    for j in range(1, MAX_EM_TERMS + 1):
        coeff = coeffs[j]
        term = coeff * poch * apow
        dterm = coeff * (dpoch - poch * log_a) * apow if deriv else mpf(0)
        size = max(abs(term) / scale, abs(dterm) / dscale)
        if prev is not None and size > prev:
            # asymptotic series has started to diverge; stop at its smallest term
            return val, dval
        val += term
        dval += dterm
        if size < tol:
            return val, dval
        prev = size
        for i in (2 * j - 1, 2 * j):
            dpoch = dpoch * (s + i) + poch
            poch = poch * (s + i)
        apow *= inv_a2
    raise ConvergenceError(
        f"Euler-Maclaurin tail did not converge for s={mpmath.nstr(s, 10)}, a={mpmath.nstr(a, 10)}"
    )


def _em(s: mpf, w: mpf, deriv: bool) -> tuple[mpf, mpf]:
    """Return (zeta_H(s, w), d/ds zeta_H(s, w)); the second is 0 unless ``deriv``."""
    digits = working_digits()
    with mp.workdps(digits + GUARD_DIGITS):
        s = +s
        w = +w
        n_terms = _shift_count(s, w, digits)
        val = mpf(0)
        dval = mpf(0)
        for k in range(n_terms):
            lx = mpmath.log(w + k)
            xs = mpmath.exp(-s * lx)
            val += xs
            if deriv:
                dval -= lx * xs
        a = w + n_terms
        log_a = mpmath.log(a)
        tail, dtail = _em_tail(s, a, log_a, deriv, abs(val), abs(dval))
        val += tail
        dval += dtail
    return +val, +dval


def class_pair(s: mpf, w: mpf, deriv: bool) -> tuple[mpf, mpf]:
    """zeta_H(s-1, w) + (1-w) zeta_H(s, w) and its s-derivative in one pass.

    Both Hurwitz functions share the finite sum: (w+k)^(1-s) + (1-w)(w+k)^-s = (k+1)(w+k)^-s.
    """
    digits = working_digits()
    with mp.workdps(digits + GUARD_DIGITS):
        s = +s
        w = +w
        n_terms = max(_shift_count(s, w, digits), _shift_count(s - 1, w, digits))
        val = mpf(0)
        dval = mpf(0)
        for k in range(n_terms):
            lx = mpmath.log(w + k)
            xs = (k + 1) * mpmath.exp(-s * lx)
            val += xs
            if deriv:
                dval -= lx * xs
        a = w + n_terms
        log_a = mpmath.log(a)
        t1, dt1 = _em_tail(s - 1, a, log_a, deriv, abs(val), abs(dval))
        t0, dt0 = _em_tail(s, a, log_a, deriv, abs(val), abs(dval))
        val += t1 + (1 - w) * t0
        dval += dt1 + (1 - w) * dt0
    return +val, +dval


def _em_coefficients() -> list[mpf]:
    """B_2j / (2j)! for j = 1..MAX_EM_TERMS at the current binary precision."""
    coeffs = _em_coeffs.get(mp.prec)
    if coeffs is None:
        coeffs = [mpf(0)] + [
            bernoulli_number(2 * j) / math.factorial(2 * j) for j in range(1, MAX_EM_TERMS + 1)
        ]
        _em_coeffs[mp.prec] = coeffs
    return coeffs


def hurwitz_zeta(s, w) -> mpf:
    """zeta_H(s, w) = sum_{k>=0} (w+k)^-s, analytically continued to real s != 1."""
    s, w = to_real(s), to_real(w)
    _check(s, w)
    return _em(s, w, deriv=False)[0]


def hurwitz_zeta_ds(s, w) -> mpf:
    """Partial derivative of zeta_H(s, w) with respect to s."""
    s, w = to_real(s), to_real(w)
    _check(s, w)
    return _em(s, w, deriv=True)[1]


def hurwitz_pair(s, w) -> tuple[mpf, mpf]:
    """Value and s-derivative from a single Euler-Maclaurin pass."""
    s, w = to_real(s), to_real(w)
    _check(s, w)
    return _em(s, w, deriv=True)


def riemann_zeta(s) -> mpf:
    return hurwitz_zeta(s, 1)
