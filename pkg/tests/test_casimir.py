import mpmath
import pytest
from mpmath import mp, mpf

from orbicasimir import numkernel as nk
from orbicasimir.casimir import (
    HYPERBOLIC_NOTE,
    CasimirReport,
    PropagationChoice,
    TriangleSignature,
    elliptic_casimir,
    elliptic_zeta,
    identity_zeta,
    large_p_ratio,
    residue_bracket,
    surface_report,
    triangle_area,
)
from orbicasimir.errors import DomainError, UnsupportedVariantError
from orbicasimir.hurwitz import riemann_zeta
from orbicasimir.oracle.heat import quad_elliptic_zeta_strip, quad_identity_zeta_strip
from orbicasimir.oracle.lattice import brute_barnes_sum

TABLE = {
    2: "0.06784431430510",
    3: "0.13711344651904",
    7: "0.56781535477158",
}


def tol(offset):
    return nk.tolerance(offset)


def test_elliptic_casimir_examples():
    assert abs(elliptic_casimir(2) - mpf(TABLE[2])) <= mpf("1e-13")
    assert abs(elliptic_casimir(9) - mpf("0.89084009854643")) <= mpf("1e-13")


@pytest.mark.parametrize("p", [2, 5, 7, 13])
def test_elliptic_zeta_limit_branch_is_casimir(p):
    assert elliptic_zeta(mpf(-0.5), p) == elliptic_casimir(p)
    # within the half-integer zone the limit value is returned
    assert elliptic_zeta(mpf(-0.5) + mpf("5e-7"), p) == elliptic_casimir(p)


@pytest.mark.parametrize("s0", ["-0.5", "-1.5", "-2.5"])
def test_limit_branch_continuity(s0):
    # symmetric neighbours average to the limit value up to O(h^2)
    s0 = mpf(s0)
    h = mpf("1e-4")
    mean = (elliptic_zeta(s0 + h, 3) + elliptic_zeta(s0 - h, 3)) / 2
    assert abs(mean - elliptic_zeta(s0, 3)) < 100 * h**2


def test_elliptic_zeta_strip_example():
    assert abs(elliptic_zeta(mpf(0.4), 3) - quad_elliptic_zeta_strip(mpf(0.4), 3).value) <= mpf("1e-10")


def test_elliptic_zeta_domain():
    for s in ("0.5", "1.5", "2.5", "1"):
        with pytest.raises(DomainError):
            elliptic_zeta(mpf(s), 3)
    with pytest.raises(DomainError):
        elliptic_zeta(mpf(-0.5), 1)
    with pytest.raises(DomainError):
        elliptic_casimir(1)
    with pytest.raises(DomainError):
        elliptic_casimir(2.0)


def test_minimal_choice_unsupported():
    assert PropagationChoice.CONFORMAL.a == mpf(0.25)
    with pytest.raises(UnsupportedVariantError):
        elliptic_zeta(mpf(-0.5), 3, PropagationChoice.MINIMAL)
    with pytest.raises(UnsupportedVariantError):
        elliptic_casimir(3, PropagationChoice.MINIMAL)
    with pytest.raises(UnsupportedVariantError):
        identity_zeta(mpf(-0.5), PropagationChoice.MINIMAL)


@pytest.mark.parametrize("sB", [-1, -3, -5])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_residue_vanishes(sB, p):
    assert abs(residue_bracket(sB, p)) <= tol(8)


def test_residue_bracket_brute_force():
    # every Barnes term of the bracket at sB = 3 enclosed by its own lattice sum
    p = 2
    parts = [brute_barnes_sum(3, 1, 2, p, 2000), brute_barnes_sum(3, 1 + p, 2, p, 2000),
             brute_barnes_sum(3, 1, 1, 1, 2000)]
    lo = parts[0].lo + parts[1].lo - parts[2].hi / p
    hi = parts[0].hi + parts[1].hi - parts[2].lo / p
    value = residue_bracket(3, p)
    assert value > 0
    assert lo <= value <= hi


@pytest.mark.parametrize("p", [2, 3, 7])
def test_simple_pole_at_one_half(p):
    half = mpf(0.5)
    firsts, seconds = [], []
    for k in range(2, 6):
        d = mpf(10) ** -k
        z = elliptic_zeta(half - d, p)
        firsts.append(-d * z)
        seconds.append(d * d * z)
    # (s-1/2)^2 zeta decays in proportion to the step
    for k, v in enumerate(seconds, start=2):
        ratio = abs(v) / mpf(10) ** -k
        assert mpf("0.01") < ratio < 1
    # (s-1/2) zeta settles on a finite nonzero constant, converging linearly
    diffs = [abs(b - a) for a, b in zip(firsts, firsts[1:])]
    for a, b in zip(diffs, diffs[1:]):
        assert b < a / 5
    assert abs(firsts[-1]) > mpf("0.01")


@pytest.mark.parametrize("s0", ["-1.5", "-2.5", "-3.5"])
def test_negative_half_integers_finite(s0):
    for p in (2, 5):
        v = elliptic_zeta(mpf(s0), p)
        assert mpmath.isfinite(v)


def test_identity_value():
    value = identity_zeta(mpf(-0.5))
    assert abs(value - mpf("-0.00231380528192948")) <= mpf("1e-16")
    # 3 zeta'(-2) / (4 pi^2) = -3 zeta(3) / (16 pi^4)
    assert abs(value + 3 * riemann_zeta(3) / (16 * mpmath.pi**4)) <= tol(6)


@pytest.mark.parametrize("s", ["1.25", "1.4"])
def test_identity_strip(s):
    assert abs(identity_zeta(mpf(s)) - quad_identity_zeta_strip(mpf(s)).value) <= mpf("1e-10")


def test_identity_domain():
    for s in ("0.5", "0", "-1", "-1.5", "1", "1.5", "2.5"):
        with pytest.raises(DomainError):
            identity_zeta(mpf(s))


def test_identity_general_point():
    # off the poles the closed form evaluates through reflected Gamma values
    s = mpf("-0.3")
    expected = (mpmath.gamma(1.5 - s) * mpmath.gamma(2 * s - 1) / (mpmath.pi**1.5 * mpmath.gamma(s))
                * (1 - mpf(2) ** (1 - 2 * s)) * mpmath.zeta(2 * s - 1))
    assert abs(identity_zeta(s) - expected) < tol(4)


@pytest.mark.parametrize("sig, expected", [
    ((2, 3, 7), mpmath.pi / 21),
    ((2, 3, 8), mpmath.pi / 12),
    ((3, 3, 4), mpmath.pi / 6),
])
def test_triangle_area(sig, expected):
    assert abs(triangle_area(TriangleSignature(*sig)) - expected) <= mpf(2) ** -mp.prec * expected


def test_signature_validation():
    for sig in ((2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 2, 100), (1, 5, 7)):
        with pytest.raises(DomainError):
            TriangleSignature(*sig)


def test_surface_report_237():
    rep = surface_report(TriangleSignature(2, 3, 7))
    assert isinstance(rep, CasimirReport)
    assert [o for o, _ in rep.elliptic_terms] == [2, 3, 7]
    table_sum = mpf("0.06784431430510") + mpf("0.13711344651904") + mpf("0.56781535477158")
    assert abs(rep.elliptic_sum - table_sum) <= mpf("3e-13")
    assert abs(rep.identity_total - mpf("-0.00034614446")) <= mpf("1e-10")
    assert rep.identity_total == rep.area * rep.identity_density
    assert rep.zeta_half_partial == rep.elliptic_sum + rep.identity_total
    assert rep.energy_partial == rep.zeta_half_partial / 2
    assert rep.excluded == HYPERBOLIC_NOTE


def test_surface_report_charged():
    plain = surface_report((2, 3, 7))
    charged = surface_report((2, 3, 7), charged=True)
    assert charged.energy_partial == 2 * plain.energy_partial
    assert charged.energy_partial == charged.zeta_half_partial


def test_large_p_ratio_small():
    assert abs(large_p_ratio(2) - mpf("0.06784431430510") / 4) <= mpf("1e-13")


@pytest.mark.slow
def test_large_p_ratio_trend():
    # the p^2 growth constant is approached slowly; smoke check only
    r100, r1000 = large_p_ratio(100), large_p_ratio(1000)
    assert abs(r100 - r1000) / r1000 < mpf("0.05")


@pytest.mark.parametrize("p", [3, 8])
def test_precision_stability(p):
    lo = elliptic_casimir(p)
    with mp.workdps(80):
        hi = elliptic_casimir(p)
    assert abs(lo - hi) <= mpf(10) ** -36 * abs(hi)
