"""Elliptic and identity zeta functions, Casimir energies and surface reports.

Conformal propagation only: the e^{t/4} factor in the Mellin transform cancels
the e^{-t/4} of the heat kernels, which is what lets the elliptic zeta
function collapse onto Barnes zeta functions,

    zeta_p(s) = sec(pi s) [zeta_B2(2s, 1|2,p) + zeta_B2(2s, 1+p|2,p) - zeta_B2(2s, 1|1,1)/p].
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral

import mpmath
from mpmath import mp, mpf

from .barnes import barnes_zeta2, barnes_zeta2_ds
from .errors import DomainError, UnsupportedVariantError
from .hurwitz import hurwitz_zeta_ds, riemann_zeta
from .numkernel import GUARD_DIGITS, gamma_real, to_real

HALF_INTEGER_ZONE = mpf("1e-6")
POLE_ZONE = mpf("1e-6")
HYPERBOLIC_NOTE = "hyperbolic conjugacy classes omitted"


class PropagationChoice(enum.Enum):
    CONFORMAL = "conformal"  # a = 1/4
    MINIMAL = "minimal"  # a = 0, not implemented

    @property
    def a(self) -> Fraction:
        return Fraction(1, 4) if self is PropagationChoice.CONFORMAL else Fraction(0)


def _require_conformal(propagation: PropagationChoice) -> None:
    if propagation is not PropagationChoice.CONFORMAL:
        raise UnsupportedVariantError(
            "minimal propagation (a=0) is not supported; only the conformal choice a=1/4 is computable"
        )


def check_order(p) -> int:
    if isinstance(p, bool) or not isinstance(p, Integral):
        raise DomainError(f"order must be an integer, got {p!r}")
    if p < 2:
        raise DomainError(f"order must be >= 2, got {p}")
    return int(p)


@dataclass(frozen=True)
class TriangleSignature:
    p: int
    q: int
    r: int

    def __post_init__(self):
        for v in (self.p, self.q, self.r):
            check_order(v)
        if Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.r) >= 1:
            raise DomainError(f"signature ({self.p},{self.q},{self.r}) not hyperbolic: 1/p+1/q+1/r >= 1")

    def orders(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


@dataclass(frozen=True)
class CasimirReport:
    signature: TriangleSignature
    area: mpf
    elliptic_terms: list[tuple[int, mpf]]
    identity_density: mpf
    charged: bool = False
    excluded: str = field(default=HYPERBOLIC_NOTE)

    @property
    def elliptic_sum(self) -> mpf:
        total = mpf(0)
        for _, value in self.elliptic_terms:
            total += value
        return total

    @property
    def identity_total(self) -> mpf:
        return self.area * self.identity_density

    @property
    def zeta_half_partial(self) -> mpf:
        return self.elliptic_sum + self.identity_total

    @property
    def energy_partial(self) -> mpf:
        energy = self.zeta_half_partial / 2
        return 2 * energy if self.charged else energy


def residue_bracket(sB, p) -> mpf:
    """zeta_B2(sB,1|2,p) + zeta_B2(sB,1+p|2,p) - zeta_B2(sB,1|1,1)/p."""
    p = check_order(p)
    sB = to_real(sB)
    with mp.extradps(GUARD_DIGITS):
        value = barnes_zeta2(sB, 1, 2, p) + barnes_zeta2(sB, 1 + p, 2, p) - barnes_zeta2(sB, 1, 1, 1) / p
    return +value


def _residue_bracket_ds(sB: mpf, p: int) -> mpf:
    with mp.extradps(GUARD_DIGITS):
        value = (
            barnes_zeta2_ds(sB, 1, 2, p)
            + barnes_zeta2_ds(sB, 1 + p, 2, p)
            - barnes_zeta2_ds(sB, 1, 1, 1) / p
        )
    return +value


def _nearest_half_odd(s: mpf) -> int | None:
    """Return the odd integer n with |s - n/2| <= HALF_INTEGER_ZONE, if any."""
    n = int(mpmath.nint(2 * s))
    if n % 2 and abs(s - mpf(n) / 2) <= HALF_INTEGER_ZONE:
        return n
    return None


def elliptic_zeta(s, p, propagation: PropagationChoice = PropagationChoice.CONFORMAL) -> mpf:
    """Spectral zeta function of an order-p elliptic fixed point, continued in s.

    At negative half-integers the secant pole is cancelled by the vanishing
    Barnes bracket; the finite value there is 2(-1)^k/pi times the bracket's
    derivative at 2s = -(2k+1).
    """
    _require_conformal(propagation)
    p = check_order(p)
    s = to_real(s)
    n = _nearest_half_odd(s)
    if n is not None:
        if n > 0:
            raise DomainError(f"s={mpmath.nstr(s, 10)} is at a positive half-integer pole of sec(pi s)")
        k = (-n - 1) // 2
        with mp.extradps(GUARD_DIGITS):
            value = 2 * (-1) ** k / mpmath.pi * _residue_bracket_ds(mpf(n), p)
        return +value
    if abs(2 * s - 2) <= POLE_ZONE:
        raise DomainError(f"2s={mpmath.nstr(2 * s, 10)} lies in the Barnes pole zone around 2")
    with mp.extradps(GUARD_DIGITS):
        value = mpmath.sec(mpmath.pi * s) * residue_bracket(2 * s, p)
    return +value


def elliptic_casimir(p, propagation: PropagationChoice = PropagationChoice.CONFORMAL) -> mpf:
    """zeta_p(-1/2) = (2/pi)[zeta'_B2(-1,1|2,p) + zeta'_B2(-1,1+p|2,p) - zeta'_B2(-1,1|1,1)/p]."""
    _require_conformal(propagation)
    return +_elliptic_casimir_cached(check_order(p), mp.prec)


@functools.lru_cache(maxsize=256)
def _elliptic_casimir_cached(p: int, prec: int) -> mpf:
    # prec only keys the cache; evaluation uses the ambient precision, which equals it
    with mp.extradps(GUARD_DIGITS):
        return 2 / mpmath.pi * _residue_bracket_ds(mpf(-1), p)


def large_p_ratio(p) -> mpf:
    p = check_order(p)
    return elliptic_casimir(p) / p**2


def _near_integer(x: mpf) -> int | None:
    n = int(mpmath.nint(x))
    return n if abs(x - n) <= POLE_ZONE else None


def identity_zeta(s, propagation: PropagationChoice = PropagationChoice.CONFORMAL) -> mpf:
    """Identity-element zeta function per unit area.

    zeta_1(s) = Gamma(3/2-s) Gamma(2s-1) / (pi^{3/2} Gamma(s)) * (1 - 2^{1-2s}) * zeta_R(2s-1)

    At s = -1/2 the Gamma(2s-1) pole meets the trivial zero of zeta_R(-2), leaving
    3 zeta_R'(-2) / (4 pi^2).
    """
    _require_conformal(propagation)
    s = to_real(s)
    if abs(s + mpf(0.5)) <= POLE_ZONE:
        with mp.extradps(GUARD_DIGITS):
            value = 3 * hurwitz_zeta_ds(-2, 1) / (4 * mpmath.pi**2)
        return +value
    n = _near_integer(2 * s - 1)
    if n is not None and n <= 0:
        raise DomainError(f"identity_zeta: Gamma(2s-1) pole at s={mpmath.nstr(s, 10)}")
    n = _near_integer(mpf(1.5) - s)
    if n is not None and n <= 0:
        raise DomainError(f"identity_zeta: Gamma(3/2-s) pole at s={mpmath.nstr(s, 10)}")
    if abs(s - 1) <= POLE_ZONE:
        raise DomainError("identity_zeta: zeta_R(2s-1) pole at s=1")
    with mp.extradps(GUARD_DIGITS):
        value = (
            gamma_real(mpf(1.5) - s)
            * gamma_real(2 * s - 1)
            / (mpmath.pi ** mpf(1.5) * gamma_real(s))
            * (1 - mpf(2) ** (1 - 2 * s))
            * riemann_zeta(2 * s - 1)
        )
    return +value


def triangle_area(sig: TriangleSignature) -> mpf:
    """Fundamental-domain area 2 pi (1 - 1/p - 1/q - 1/r)."""
    if not isinstance(sig, TriangleSignature):
        sig = TriangleSignature(*sig)
    defect = 1 - Fraction(1, sig.p) - Fraction(1, sig.q) - Fraction(1, sig.r)
    return 2 * mpmath.pi * defect.numerator / defect.denominator


def surface_report(sig: TriangleSignature, charged: bool = False) -> CasimirReport:
    """Elliptic plus identity contributions for a (p,q,r) triangle surface, one class per vertex."""
    if not isinstance(sig, TriangleSignature):
        sig = TriangleSignature(*sig)
    terms = [(order, elliptic_casimir(order)) for order in sig.orders()]
    return CasimirReport(
        signature=sig,
        area=triangle_area(sig),
        elliptic_terms=terms,
        identity_density=identity_zeta(mpf(-0.5)),
        charged=bool(charged),
    )
