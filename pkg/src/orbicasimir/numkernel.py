"""Working precision, Bernoulli numbers/polynomials and ln Gamma.

Every continuous quantity in the package is an ``mpmath.mpf``.  The number of
significant decimal digits is a process-wide setting (``working_digits``),
mirrored onto ``mpmath.mp.dps``.
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from fractions import Fraction
from math import comb
from typing import Iterator

import mpmath
from mpmath import mp, mpf

from .errors import DomainError

DEFAULT_DIGITS = 40
MIN_DIGITS = 20
BERNOULLI_CAP = 200
GUARD_DIGITS = 10

Real = mpf

mp.dps = DEFAULT_DIGITS

_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]


def working_digits() -> int:
    return mp.dps


def set_working_digits(digits: int) -> None:
    if int(digits) < MIN_DIGITS:
        raise DomainError(f"working_digits must be >= {MIN_DIGITS}, got {digits}")
    mp.dps = int(digits)


@contextmanager
def precision(digits: int) -> Iterator[None]:
    """Temporarily run at ``digits`` significant digits."""
    if int(digits) < MIN_DIGITS:
        raise DomainError(f"working_digits must be >= {MIN_DIGITS}, got {digits}")
    with mp.workdps(int(digits)):
        yield


def to_real(x) -> mpf:
    """Convert int/str/float/Fraction/mpf to a Real at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, str) and "/" in x:
        num, den = x.split("/", 1)
        return mpf(num.strip()) / mpf(den.strip())
    return mpf(x)


def tolerance(offset: int) -> mpf:
    """10^-(working_digits - offset)."""
    return mpf(10) ** (offset - working_digits())


def _extend_bernoulli(n: int) -> None:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0
    with _lock:
        for m in range(len(_bernoulli), n + 1):
            acc = sum(comb(m + 1, k) * _bernoulli[k] for k in range(m))
            _bernoulli.append(-acc / (m + 1))


def bernoulli_fraction(n: int) -> Fraction:
    """Exact B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {n}")
    if n > BERNOULLI_CAP:
        raise DomainError(f"Bernoulli index {n} exceeds the table cap {BERNOULLI_CAP}")
    if n >= len(_bernoulli):
        _extend_bernoulli(n)
    return _bernoulli[n]


def bernoulli_number(n: int) -> mpf:
    return to_real(bernoulli_fraction(n))


def bernoulli_poly(n: int, x) -> mpf:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k), evaluated by Horner in x."""
    if n < 0:
        raise DomainError(f"Bernoulli polynomial degree must be >= 0, got {n}")
    x = to_real(x)
    acc = mpf(0)
    # coefficient of x^(n-k) is C(n,k) B_k; Horner from highest power (k=0) down
    for k in range(n + 1):
        acc = acc * x + comb(n, k) * bernoulli_number(k)
    return acc


def log_gamma(x) -> mpf:
    """ln Gamma(x) for real x > 0 via upward shift and the Stirling series."""
    x = to_real(x)
    if x <= 0:
        raise DomainError(f"log_gamma needs x > 0, got {mpmath.nstr(x, 10)}")
    digits = working_digits()
    with mp.extradps(GUARD_DIGITS):
        x = +x
        threshold = max(20, digits / 1.5)
        shift = mpf(1)
        while x < threshold:
            shift *= x
            x += 1
        eps = mpf(10) ** (-(digits + GUARD_DIGITS))
        result = (x - mpf(0.5)) * mpmath.log(x) - x + mpmath.log(2 * mpmath.pi) / 2
        x2 = x * x
        xpow = x
        for k in range(1, BERNOULLI_CAP // 2 + 1):
            term = bernoulli_number(2 * k) / (2 * k * (2 * k - 1) * xpow)
            result += term
            if abs(term) < eps * abs(result):
                break
            xpow *= x2
        else:
            raise AssertionError("Stirling series did not converge")
        result -= mpmath.log(shift)
    return +result


def gamma_real(x) -> mpf:
    """Gamma(x) for real x off the non-positive integers, by reflection for x < 1/2."""
    x = to_real(x)
    if x > 0:
        return mpmath.exp(log_gamma(x))
    if x == mpmath.floor(x):
        raise DomainError(f"Gamma has a pole at {mpmath.nstr(x, 10)}")
    return mpmath.pi / (mpmath.sin(mpmath.pi * x) * mpmath.exp(log_gamma(1 - x)))
