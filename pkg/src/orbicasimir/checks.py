"""Self-check suites pairing continued formulas with their independent oracles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from mpmath import mpf

from .barnes import barnes_zeta2
from .casimir import elliptic_zeta, identity_zeta, residue_bracket
from .numkernel import tolerance
from .oracle.heat import heat_kernel_kp, image_sum_lhs, image_sum_rhs, quad_elliptic_zeta_strip, quad_identity_zeta_strip
from .oracle.lattice import brute_barnes_sum

RESIDUE_ORDERS = (2, 3, 5, 7, 11)
RESIDUE_POINTS = (-1, -3, -5)
STRIP_S = ("0.30", "0.35", "0.40", "0.45")
STRIP_ORDERS = (2, 3, 7)
IDENTITY_STRIP_S = ("1.25", "1.4")
IMAGE_ORDERS = (2, 3, 5, 7, 12)
IMAGE_X = ("0.01", "0.1", "1", "5")
HEAT_ORDERS = (2, 3, 7)
HEAT_T = ("0.1", "1", "10")
BRUTE_CASES = (
    # (s, gamma, alpha, beta, cutoff)
    (3, 1, 1, 1, 5000),
    (3, 1, 2, 3, 4000),
    (4, 6, 2, 5, 2000),
)
STRIP_TOL = mpf("1e-10")
HEAT_TOL = mpf("1e-12")
BRUTE_WIDTH = mpf("1e-12")


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: mpf
    tolerance: mpf

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def residues() -> list[CheckResult]:
    tol = tolerance(8)
    return [
        CheckResult(f"residue sB={sB} p={p}", abs(residue_bracket(sB, p)), tol)
        for sB in RESIDUE_POINTS
        for p in RESIDUE_ORDERS
    ]


def strip() -> list[CheckResult]:
    out = []
    for p in STRIP_ORDERS:
        for s in STRIP_S:
            quad = quad_elliptic_zeta_strip(s, p)
            out.append(CheckResult(f"strip elliptic s={s} p={p}", abs(elliptic_zeta(s, p) - quad.value), STRIP_TOL))
    for s in IDENTITY_STRIP_S:
        quad = quad_identity_zeta_strip(s)
        out.append(CheckResult(f"strip identity s={s}", abs(identity_zeta(s) - quad.value), STRIP_TOL))
    return out


def imagesum() -> list[CheckResult]:
    tol = tolerance(8)
    out = []
    for p in IMAGE_ORDERS:
        for x in IMAGE_X:
            lhs, rhs = image_sum_lhs(p, x), image_sum_rhs(p, x)
            out.append(CheckResult(f"imagesum p={p} x={x}", abs(lhs - rhs) / abs(rhs), tol))
    return out


def bruteforce() -> list[CheckResult]:
    out = []
    for s, gamma, alpha, beta, cutoff in BRUTE_CASES:
        label = f"s={s} gamma={gamma} omega=({alpha},{beta})"
        enc = brute_barnes_sum(s, gamma, alpha, beta, cutoff)
        value = barnes_zeta2(s, gamma, alpha, beta)
        outside = max(mpf(0), abs(value - enc.value) - enc.bound)
        out.append(CheckResult(f"bruteforce inside {label}", outside, mpf(0)))
        out.append(CheckResult(f"bruteforce width {label}", 2 * enc.bound, BRUTE_WIDTH))
    return out


def heatkernel() -> list[CheckResult]:
    out = []
    for p in HEAT_ORDERS:
        for t in HEAT_T:
            a = heat_kernel_kp(p, t, form="coth").value
            b = heat_kernel_kp(p, t, form="msum").value
            out.append(CheckResult(f"heatkernel p={p} t={t}", abs(a - b) / abs(a), HEAT_TOL))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "residues": residues,
    "strip": strip,
    "imagesum": imagesum,
    "bruteforce": bruteforce,
    "heatkernel": heatkernel,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for suite in SUITES.values() for r in suite()]
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return suite()
