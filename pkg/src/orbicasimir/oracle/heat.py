"""Heat-kernel side of the verification: image sums, kernels and Mellin-strip quadratures.

The strip integrals are independent of the Barnes/Hurwitz machinery: they
integrate the heat-kernel brackets directly.

Identity strip reduction (1 < s < 3/2).  With K_1(t) = e^{-t/4} / (2 (pi t)^{3/2})
int_0^inf x e^{-x^2/t} / sinh x dx per unit area and a = 1/4,

    zeta_1(s) = 1/Gamma(s) int_0^inf dt t^{s-5/2} / (2 pi^{3/2}) int_0^inf dx x e^{-x^2/t} / sinh x.

Substituting u = x^2/t in the t integral gives int_0^inf t^{s-5/2} e^{-x^2/t} dt
= Gamma(3/2 - s) x^{2s-3} for s < 3/2, so

    zeta_1(s) = Gamma(3/2 - s) / (2 pi^{3/2} Gamma(s)) int_0^inf x^{2s-2} / sinh x dx,

convergent at x = 0 for s > 1.  Using int_0^inf x^{a-1}/sinh x dx = 2(1 - 2^{-a}) Gamma(a) zeta_R(a)
with a = 2s-1 recovers the closed form in ``casimir.identity_zeta``.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from ..casimir import check_order
from ..errors import ConvergenceError, DomainError
from ..numkernel import gamma_real, to_real, working_digits
from .quadrature import QuadratureConfig, QuadResult, integrate

SERIES_CUTOFF = mpf("1e-3")

# Taylor coefficients of coth(px)/sinh(2x) - 1/(2p sinh^2 x) in x^0, x^2, ..., x^10.
# The 1/(2p x^2) poles of the two terms cancel; expanding both Laurent series
# (sympy, exact) and collecting gives (p^2-1)/p times the polynomials below.
_BRACKET_SERIES = [
    (Fraction(1, 6), (1,)),
    (Fraction(-1, 90), (1, 0, 11)),
    (Fraction(1, 945), (1, 0, 8, 0, 57)),
    (Fraction(-1, 28350), (3, 0, 23, 0, 121, 0, 741)),
    (Fraction(1, 467775), (5, 0, 38, 0, 192, 0, 874, 0, 5065)),
    (Fraction(-1, 638512875), (691, 0, 5241, 0, 26262, 0, 114922, 0, 496303, 0, 2821353)),
]


def _check_x(x: mpf) -> None:
    if x <= 0:
        raise DomainError(f"x must be positive, got {mpmath.nstr(x, 10)}")


def _check_image_order(p) -> int:
    if isinstance(p, bool) or int(p) != p or p < 1:
        raise DomainError(f"order must be a positive integer, got {p!r}")
    return int(p)


def image_sum_lhs(p, x) -> mpf:
    """sum_{m=0}^{p-1} 1 / (sin^2(pi m/p) + sinh^2 x), summed directly."""
    p = _check_image_order(p)
    x = to_real(x)
    _check_x(x)
    sh2 = mpmath.sinh(x) ** 2
    total = mpf(0)
    for m in range(p):
        total += 1 / (mpmath.sin(mpmath.pi * m / p) ** 2 + sh2)
    return total


def image_sum_rhs(p, x) -> mpf:
    """2p coth(px) / sinh(2x), in exp(-2x) form so large x never forms huge intermediates."""
    p = _check_image_order(p)
    x = to_real(x)
    _check_x(x)
    e2 = mpmath.exp(-2 * x)
    coth_px = (1 + e2**p) / -mpmath.expm1(-2 * p * x)
    inv_sinh_2x = 2 * e2 / -mpmath.expm1(-4 * x)
    return 2 * p * coth_px * inv_sinh_2x


def _bracket_series(p: int, x: mpf) -> mpf:
    x2 = x * x
    pref = mpf(p * p - 1) / p
    p2 = p * p
    total = mpf(0)
    xpow = mpf(1)
    for scale, poly in _BRACKET_SERIES:
        acc = 0
        for c in poly[::2]:
            acc = acc * p2 + c
        total += to_real(scale * acc) * xpow
        xpow *= x2
    return pref * total


def elliptic_bracket_integrand(p, x) -> mpf:
    """coth(px)/sinh(2x) - 1/(2p sinh^2 x)."""
    p = check_order(p)
    x = to_real(x)
    _check_x(x)
    if x < SERIES_CUTOFF and p * x < SERIES_CUTOFF:
        return _bracket_series(p, x)
    if x < 1:
        # cancellation of the 1/x^2 terms costs about 2 log10(1/x) digits
        extra = 2 * int(mpmath.ceil(-mpmath.log10(x))) + 5
        with mp.extradps(extra):
            value = mpmath.coth(p * x) / mpmath.sinh(2 * x) - 1 / (2 * p * mpmath.sinh(x) ** 2)
        return +value
    e2 = mpmath.exp(-2 * x)
    coth_px = (1 + e2**p) / -mpmath.expm1(-2 * p * x)
    inv_sinh_2x = 2 * e2 / -mpmath.expm1(-4 * x)
    inv_sinh2 = 4 * e2 / mpmath.expm1(-2 * x) ** 2
    return coth_px * inv_sinh_2x - inv_sinh2 / (2 * p)


def _bracket_envelope(p: int, X: mpf) -> mpf:
    """C with |bracket(x)| <= C e^{-2x} for x >= X."""
    c1 = 2 * mpmath.coth(p * X) / -mpmath.expm1(-4 * X)
    c2 = mpf(2) / p / mpmath.expm1(-2 * X) ** 2
    return c1 + c2


def _config(cfg: QuadratureConfig | None) -> QuadratureConfig:
    return cfg if cfg is not None else QuadratureConfig()


def heat_kernel_kp(p, t, cfg: QuadratureConfig | None = None, form: str = "coth") -> QuadResult:
    """Elliptic heat kernel K_p(t) by quadrature.

    ``form="coth"`` integrates the closed bracket; ``form="msum"`` integrates the
    original image sum over m = 1..p-1 term by term.
    """
    p = check_order(p)
    t = to_real(t)
    if t <= 0:
        raise DomainError(f"t must be positive, got {mpmath.nstr(t, 10)}")
    cfg = _config(cfg)
    X = cfg.split_point
    points = [mpf(0), mpf(1), X]
    gauss = lambda x: mpmath.exp(-x * x / t)

    if form == "coth":
        res = integrate(lambda x: gauss(x) * elliptic_bracket_integrand(p, x), points,
                        cfg.target_rel_error, cfg.max_levels)
        pref = 1 / mpmath.sqrt(mpmath.pi * t)
        tail = _bracket_envelope(p, X) * mpmath.exp(-X * X / t - 2 * X) / 2
    elif form == "msum":
        value = mpf(0)
        error = mpf(0)
        for m in range(1, p):
            sn2 = mpmath.sin(mpmath.pi * m / p) ** 2
            r = integrate(lambda x: gauss(x) / (sn2 + mpmath.sinh(x) ** 2), points,
                          cfg.target_rel_error, cfg.max_levels)
            value += r.value
            error += r.error
        res = QuadResult(value, error)
        pref = 1 / (mpmath.sqrt(4 * mpmath.pi * t) * p)
        # 1/(sin^2 + sinh^2 x) <= 4 e^{-2x} / (1 - e^{-2X})^2
        tail = (p - 1) * 4 / mpmath.expm1(-2 * X) ** 2 * mpmath.exp(-X * X / t - 2 * X) / 2
    else:
        raise ValueError(f"unknown heat-kernel form {form!r}")
    pref *= mpmath.exp(-t / 4)
    value = pref * res.value
    error = pref * (res.error + tail)
    return QuadResult(value, error)


def _finish(value: mpf, quad_err: mpf, tail: mpf, cfg: QuadratureConfig) -> QuadResult:
    if tail > cfg.target_rel_error * abs(value):
        raise ConvergenceError(
            f"tail bound {mpmath.nstr(tail, 3)} exceeds the target; raise split_point"
        )
    return QuadResult(value, quad_err + tail)


def quad_elliptic_zeta_strip(s, p, cfg: QuadratureConfig | None = None) -> QuadResult:
    """zeta_p(s) = Gamma(1/2-s) / (sqrt(pi) Gamma(s)) int_0^inf x^{2s-1} bracket(x) dx, 1/4 < s < 1/2."""
    p = check_order(p)
    s = to_real(s)
    if not (mpf(0.25) < s < mpf(0.5)):
        raise DomainError(f"strip quadrature needs 1/4 < s < 1/2, got s={mpmath.nstr(s, 10)}")
    cfg = _config(cfg)
    X = cfg.split_point
    res = integrate(lambda x: x ** (2 * s - 1) * elliptic_bracket_integrand(p, x),
                    [mpf(0), mpf(1), X], cfg.target_rel_error, cfg.max_levels)
    pref = gamma_real(mpf(0.5) - s) / (mpmath.sqrt(mpmath.pi) * gamma_real(s))
    tail = _bracket_envelope(p, X) * X ** (2 * s - 1) * mpmath.exp(-2 * X) / 2
    return _finish(pref * res.value, abs(pref) * res.error, abs(pref) * tail, cfg)


def quad_identity_zeta_strip(s, cfg: QuadratureConfig | None = None) -> QuadResult:
    """Per-unit-area identity zeta on 1 < s < 3/2 from the reduced single integral.

    The envelope of 1/sinh x decays like e^{-x}, half the rate of the elliptic
    bracket, so the finite panel runs to twice ``split_point``.
    """
    s = to_real(s)
    if not (1 < s < mpf(1.5)):
        raise DomainError(f"strip quadrature needs 1 < s < 3/2, got s={mpmath.nstr(s, 10)}")
    cfg = _config(cfg)
    X = 2 * cfg.split_point
    res = integrate(lambda x: x ** (2 * s - 2) / mpmath.sinh(x),
                    [mpf(0), mpf(1), X], cfg.target_rel_error, cfg.max_levels)
    pref = gamma_real(mpf(1.5) - s) / (2 * mpmath.pi ** mpf(1.5) * gamma_real(s))
    a = 2 * s - 2
    tail = 2 / -mpmath.expm1(-2 * X) * X**a * mpmath.exp(-X) / (1 - a / X)
    return _finish(pref * res.value, abs(pref) * res.error, abs(pref) * tail, cfg)
