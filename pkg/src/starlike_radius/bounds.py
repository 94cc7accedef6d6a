"""Radial bounds for subordinate factors and for members of T1 and T2.

For ``|z| <= r`` and ``p`` subordinate to ``sqrt(1 + z)``::

    sqrt(1 - r) <= |p(z)| <= sqrt(1 + r),     |z p'(z) / p(z)| <= r / (2 (1 - r))

and for ``p`` subordinate to ``exp(z)``::

    exp(-r) <= |p(z)| <= exp(r),
    |z p'(z) / p(z)| <= r                               if r <= sqrt(2) - 1
                      <= (1 + r^2)^2 / (4 (1 - r^2))    otherwise.

Summing three factor bounds gives the member bound ``|z f'/f - 1| <= member_bound(r)``.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

from .analytic import DomainError, FactorKind, Family

SQRT2_MINUS_1 = math.sqrt(2.0) - 1.0

# Library-wide tolerances; the harness may override them through its config.
DOMINANCE_SLACK = 1e-10
ROUND_TRIP_TOL = 1e-12
BISECTION_TOL = 1e-14

# Sampling protocol defaults for the randomized dominance suites.
DEFAULT_SAMPLES = 1000
DEFAULT_BOUNDARY_SAMPLES = 64
DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


class ModulusRange(NamedTuple):
    lo: float
    hi: float

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


def _check_radius(r: float) -> float:
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def sqrt_factor_bound(r: float) -> float:
    r = _check_radius(r)
    return r / (2.0 * (1.0 - r))


def exp_factor_bound(r: float) -> float:
    r = _check_radius(r)
    if r <= SQRT2_MINUS_1:
        return r
    r2 = r * r
    return (1.0 + r2) ** 2 / (4.0 * (1.0 - r2))


def factor_bound(kind: FactorKind | str, r: float) -> float:
    if FactorKind(kind) is FactorKind.SQRT_ONE_PLUS:
        return sqrt_factor_bound(r)
    return exp_factor_bound(r)


def factor_modulus_range(kind: FactorKind | str, r: float) -> ModulusRange:
    r = _check_radius(r)
    if FactorKind(kind) is FactorKind.SQRT_ONE_PLUS:
        return ModulusRange(math.sqrt(1.0 - r), math.sqrt(1.0 + r))
    return ModulusRange(math.exp(-r), math.exp(r))


def member_bound(family: Family | str, r: float) -> float:
    """Upper bound for ``|z f'(z)/f(z) - 1|`` over ``|z| <= r``."""
    if Family(family) is Family.T1:
        r = _check_radius(r)
        return 3.0 * r / (2.0 * (1.0 - r))
    return 3.0 * exp_factor_bound(r)


def member_growth_range(family: Family | str, r: float) -> ModulusRange:
    r = _check_radius(r)
    if Family(family) is Family.T1:
        return ModulusRange(r * (1.0 - r) ** 1.5, r * (1.0 + r) ** 1.5)
    return ModulusRange(r * math.exp(-3.0 * r), r * math.exp(3.0 * r))


def bisect_increasing(
    func: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float = BISECTION_TOL,
) -> float:
    """Root of ``func(x) = target`` for increasing ``func`` with ``func(lo) <= target < func(hi)``."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if func(mid) <= target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def invert_member_bound(family: Family | str, delta: float, tol: float = BISECTION_TOL) -> float:
    """The unique ``r`` in (0, 1) with ``member_bound(family, r) == delta``."""
    delta = float(delta)
    if not delta > 0.0 or not math.isfinite(delta):
        raise DomainError(f"delta must be a positive finite number, got {delta!r}")
    if Family(family) is Family.T1:
        return 2.0 * delta / (3.0 + 2.0 * delta)
    if delta <= 3.0 * SQRT2_MINUS_1:
        return delta / 3.0

    def quartic_branch(r: float) -> float:
        r2 = r * r
        return 3.0 * (1.0 + r2) ** 2 / (4.0 * (1.0 - r2))

    hi_gap = 0.5
    while quartic_branch(1.0 - hi_gap) <= delta:
        hi_gap *= 0.5
        if 1.0 - hi_gap == 1.0:
            # root closer to 1 than double precision resolves
            return math.nextafter(1.0, 0.0)
    return bisect_increasing(quartic_branch, delta, SQRT2_MINUS_1, 1.0 - hi_gap, tol)
