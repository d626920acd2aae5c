"""Tanh-sinh (double-exponential) quadrature at the working precision."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import mpmath
from mpmath import mp, mpf

from ..errors import ConvergenceError, DomainError
from ..numkernel import to_real, working_digits


class QuadResult(NamedTuple):
    value: mpf
    error: mpf


@dataclass(frozen=True)
class QuadratureConfig:
    target_rel_error: mpf = mpf("1e-16")
    max_levels: int = 12
    split_point: mpf = mpf(40)

    def __post_init__(self):
        object.__setattr__(self, "target_rel_error", to_real(self.target_rel_error))
        object.__setattr__(self, "split_point", to_real(self.split_point))
        floor = mpf(10) ** (8 - working_digits())
        if self.target_rel_error < floor:
            raise DomainError(
                f"target_rel_error must be >= 1e-{working_digits() - 8} at the current precision"
            )
        if self.split_point <= 1:
            raise DomainError("split_point must exceed 1")
        if self.max_levels < 1:
            raise DomainError("max_levels must be positive")

    def refined(self) -> "QuadratureConfig":
        return QuadratureConfig(self.target_rel_error / 2, self.max_levels, self.split_point)


_node_cache: dict[tuple[int, int], list[tuple[mpf, mpf, mpf]]] = {}


def _nodes(level: int, t_max: mpf) -> list[tuple[mpf, mpf, mpf]]:
    key = (mp.prec, level)
    nodes = _node_cache.get(key)
    if nodes is None:
        nodes = _node_cache[key] = list(_generate_nodes(level, t_max))
    return nodes


def _generate_nodes(level: int, t_max: mpf):
    """Yield (t, offset fraction from the nearer end, weight factor) for one refinement level."""
    h = mpf(2) ** (-level)
    step = 1 if level == 0 else 2
    k = 0 if level == 0 else 1
    half_pi = mpmath.pi / 2
    while k * h <= t_max:
        t = k * h
        u = half_pi * mpmath.sinh(t)
        e = mpmath.exp(-2 * u)
        frac = e / (1 + e)  # distance to the nearer endpoint over (b - a)
        # dx/dt / (b - a) = (pi/2) cosh(t) sech^2(u) / 2
        jac = half_pi * mpmath.cosh(t) * 2 * e / (1 + e) ** 2
        yield t, frac, jac
        k += step


@functools.lru_cache(maxsize=None)
def _t_max_at(prec: int) -> mpf:
    return _t_max()


def _t_max() -> mpf:
    # smallest t with sech^2((pi/2) sinh t) * cosh t below 10^-(dps+10)
    eps = mpf(10) ** (-(working_digits() + 10))
    t = mpf(1)
    while mpmath.cosh(t) * 4 * mpmath.exp(-mpmath.pi * mpmath.sinh(t)) > eps:
        t += mpf(0.25)
    return t


def tanh_sinh(
    f: Callable[[mpf], mpf],
    a,
    b,
    target_rel_error,
    max_levels: int,
) -> QuadResult:
    """Integrate f over [a, b]; the error estimate is the last change between levels."""
    a, b = to_real(a), to_real(b)
    width = b - a
    t_max = _t_max_at(mp.prec)
    total = mpf(0)
    absolute = mpf(0)
    previous = None
    for level in range(max_levels + 1):
        h = mpf(2) ** (-level)
        for t, frac, jac in _nodes(level, t_max):
            off = width * frac
            if t == 0:
                v = f(a + width / 2)
                total += jac * v
                absolute += abs(jac * v)
                continue
            v1 = f(a + off)
            v2 = f(b - off)
            total += jac * (v1 + v2)
            absolute += jac * (abs(v1) + abs(v2))
        estimate = total * h * width
        if previous is not None:
            floor = absolute * h * width * mpf(10) ** (-working_digits())
            err = abs(estimate - previous) + floor
            if level >= 3 and err <= target_rel_error * abs(estimate):
                return QuadResult(estimate, err)
        previous = estimate
    raise ConvergenceError(f"tanh-sinh did not reach {mpmath.nstr(target_rel_error, 3)} in {max_levels} levels")


def integrate(
    f: Callable[[mpf], mpf],
    points: Sequence,
    target_rel_error,
    max_levels: int,
) -> QuadResult:
    """Panelwise tanh-sinh over consecutive breakpoints; errors add."""
    value = mpf(0)
    error = mpf(0)
    for lo, hi in zip(points[:-1], points[1:]):
        r = tanh_sinh(f, lo, hi, target_rel_error, max_levels)
        value += r.value
        error += r.error
    return QuadResult(value, error)
