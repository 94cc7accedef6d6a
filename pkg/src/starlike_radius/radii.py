"""Radii of starlikeness for T1 and T2 with respect to the catalog regions.

Every catalog radius has the form ``member_bound(R) = delta(region)`` where
``delta`` is the inradius of the region about 1.  :func:`closed_form_radius`
returns the known closed forms; :func:`numeric_radius` recovers the same
numbers from the numerically computed inradius, and :func:`bisection_radius`
from the disc-containment predicate alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from scipy.optimize import brentq

from .analytic import Family, eval_member_deriv, extremal_member, log_derivative_member
from .bounds import invert_member_bound, member_bound
from .regions import (
    ParameterError,
    Region,
    RegionKind,
    boundary_distance,
    disc_in_disc,
    disc_in_region,
    inradius_about_one,
)

RADIUS_TOL = 1e-8
RESIDUAL_TOL = 1e-9
SOLVER_TOL = 1e-13

_E = math.e
_SIN1 = math.sin(1.0)
_SQRT2 = math.sqrt(2.0)


class Exactness(str, enum.Enum):
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lower_bound_only"


@dataclass(frozen=True)
class RadiusQuery:
    family: Family
    region: Region

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))


# (T1 value, T1 expression, T2 value, T2 expression) for regions without parameters
_NAMED_RADII = {
    RegionKind.PARABOLA: (1 / 4, "1/4", 1 / 6, "1/6"),
    RegionKind.EXP: ((2 * _E - 2) / (5 * _E - 2), "(2e-2)/(5e-2)", (_E - 1) / (3 * _E), "(e-1)/(3e)"),
    RegionKind.CARDIOID: (4 / 13, "4/13", 2 / 9, "2/9"),
    RegionKind.SINE: (2 * _SIN1 / (3 + 2 * _SIN1), "2sin(1)/(3+2sin(1))", _SIN1 / 3, "sin(1)/3"),
    RegionKind.LUNE: (
        (4 - 2 * _SQRT2) / (7 - 2 * _SQRT2), "(4-2sqrt(2))/(7-2sqrt(2))",
        (2 - _SQRT2) / 3, "(2-sqrt(2))/3",
    ),
    RegionKind.RATIONAL: (
        (6 - 4 * _SQRT2) / (9 - 4 * _SQRT2), "(6-4sqrt(2))/(9-4sqrt(2))",
        (3 - 2 * _SQRT2) / 3, "(3-2sqrt(2))/3",
    ),
    RegionKind.NEPHROID: (4 / 13, "4/13", 2 / 9, "2/9"),
    RegionKind.SIGMOID: ((2 * _E - 2) / (5 * _E + 1), "(2e-2)/(5e+1)", (_E - 1) / (3 * (1 + _E)), "(e-1)/(3(1+e))"),
}


def janowski_radius(family: Family | str, A: float, B: float) -> tuple[float, Exactness]:
    """Janowski radius ``(A - B) / (1 + |B|)`` fed through the member bound.

    Sharp when ``B < 0``; otherwise only a sufficient radius.  For ``B = -1``
    the value coincides with the order ``(1 - A)/2`` half-plane radius.
    """
    family = Family(family)
    A, B = float(A), float(B)
    if not -1.0 <= B < A <= 1.0:
        raise ParameterError("Janowski parameters must satisfy -1 <= B < A <= 1")
    exactness = Exactness.EXACT if B < 0 else Exactness.LOWER_BOUND_ONLY
    if family is Family.T1:
        if B < 0:
            value = 2 * (A - B) / (3 + 2 * A - 5 * B)
        else:
            value = 2 * (A - B) / (3 * (1 + abs(B)) + 2 * (A - B))
    else:
        value = (A - B) / (3 * (1 - B)) if B < 0 else (A - B) / (3 * (1 + abs(B)))
    return value, exactness


def exactness_of(query: RadiusQuery) -> Exactness:
    region = query.region
    if region.kind is RegionKind.JANOWSKI and region.B >= 0:
        return Exactness.LOWER_BOUND_ONLY
    return Exactness.EXACT


def closed_form_expression(query: RadiusQuery) -> str:
    region, t1 = query.region, query.family is Family.T1
    if region.kind in (RegionKind.HALFPLANE, RegionKind.DISC):
        return "2(1-alpha)/(5-2alpha)" if t1 else "(1-alpha)/3"
    if region.kind is RegionKind.JANOWSKI:
        if region.B < 0:
            return "2(A-B)/(3+2A-5B)" if t1 else "(A-B)/(3(1-B))"
        return "2(A-B)/(3(1+|B|)+2(A-B))" if t1 else "(A-B)/(3(1+|B|))"
    entry = _NAMED_RADII[region.kind]
    return entry[1] if t1 else entry[3]


def closed_form_radius(query: RadiusQuery) -> Optional[float]:
    region, t1 = query.region, query.family is Family.T1
    if region.kind in (RegionKind.HALFPLANE, RegionKind.DISC):
        alpha = region.alpha
        return 2 * (1 - alpha) / (5 - 2 * alpha) if t1 else (1 - alpha) / 3
    if region.kind is RegionKind.JANOWSKI:
        return janowski_radius(query.family, region.A, region.B)[0]
    entry = _NAMED_RADII.get(region.kind)
    if entry is None:
        return None
    return entry[0] if t1 else entry[2]


def _bisect_predicate(predicate, tol: float) -> float:
    """Largest r in (0, 1) with ``predicate(r)`` true, for a predicate that is true then false."""
    lo, hi = 0.0, math.nextafter(1.0, 0.0)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _janowski_predicate(family: Family, region: Region):
    if region.B == -1.0:
        level = region.halfplane_level
        return lambda r: member_bound(family, r) <= 1.0 - level
    a, b = region.janowski_disc
    return lambda r: disc_in_disc(1.0, member_bound(family, r), a, b)


def numeric_radius(query: RadiusQuery, tol: float = SOLVER_TOL) -> float:
    """Radius recomputed from the region geometry rather than the closed form.

    Janowski targets bisect on the disc-in-disc criterion; every other region
    inverts the member bound at the numerically computed inradius about 1.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if query.region.kind is RegionKind.JANOWSKI:
        return _bisect_predicate(_janowski_predicate(query.family, query.region), tol)
    return invert_member_bound(query.family, inradius_about_one(query.region), tol=min(tol, 1e-14))


def bisection_radius(query: RadiusQuery, tol: float = SOLVER_TOL) -> float:
    """Second oracle: bisection on ``disc_in_region(region, 1, member_bound(r))``."""
    family, region = query.family, query.region
    return _bisect_predicate(lambda r: disc_in_region(region, 1.0, member_bound(family, r)), tol)


@dataclass(frozen=True)
class Witness:
    z: complex
    value: complex
    residual: float


def sharpness_points(query: RadiusQuery, radius: float) -> list[complex]:
    """``-R`` always; also ``+R`` for T2 in the sine region, where ``1 + 3R = 1 + sin 1``."""
    points = [complex(-radius)]
    if query.region.kind is RegionKind.SINE and query.family is Family.T2:
        points.append(complex(radius))
    return points


def sharpness_witness(query: RadiusQuery) -> Witness:
    """Evaluate the extremal member's ``z f'/f`` at the sharpness points.

    Returns the witness with the largest distance to the region boundary.
    """
    if exactness_of(query) is not Exactness.EXACT:
        raise ValueError(f"no sharpness witness for the lower-bound-only query {query.region.label}")
    radius = closed_form_radius(query)
    f = extremal_member(query.family)
    worst = None
    for z in sharpness_points(query, radius):
        value = complex(log_derivative_member(f, z))
        w = Witness(z, value, boundary_distance(query.region, value))
        if worst is None or w.residual > worst.residual:
            worst = w
    return worst


def univalence_witness(family: Family | str) -> complex:
    """Zero of the extremal member's derivative on (-1, 0)."""
    f = extremal_member(family)

    def deriv(x: float) -> float:
        return complex(eval_member_deriv(f, complex(x))).real

    root = brentq(deriv, -0.99, 0.0, xtol=1e-15, rtol=4 * 2.0**-52, maxiter=200)
    return complex(root)


@dataclass(frozen=True)
class RadiusReport:
    query: RadiusQuery
    closed_form: Optional[float]
    closed_form_expr: str
    numeric: float
    exactness: Exactness
    witness_z: Optional[complex]
    witness_value: Optional[complex]
    boundary_residual: Optional[float]

    @property
    def radius_residual(self) -> Optional[float]:
        if self.closed_form is None:
            return None
        return abs(self.closed_form - self.numeric)

    def to_dict(self) -> dict:
        def pair(z):
            return None if z is None else [z.real, z.imag]

        return {
            "family": self.query.family.value,
            "region": self.query.region.kind.value,
            "params": self.query.region.params,
            "closed_form_expr": self.closed_form_expr,
            "closed_form": self.closed_form,
            "numeric": self.numeric,
            "radius_residual": self.radius_residual,
            "exactness": self.exactness.value,
            "witness_z": pair(self.witness_z),
            "witness_value": pair(self.witness_value),
            "boundary_residual": self.boundary_residual,
        }


def radius_report(query: RadiusQuery, tol: float = SOLVER_TOL) -> RadiusReport:
    exactness = exactness_of(query)
    witness = sharpness_witness(query) if exactness is Exactness.EXACT else None
    return RadiusReport(
        query=query,
        closed_form=closed_form_radius(query),
        closed_form_expr=closed_form_expression(query),
        numeric=numeric_radius(query, tol),
        exactness=exactness,
        witness_z=None if witness is None else witness.z,
        witness_value=None if witness is None else witness.value,
        boundary_residual=None if witness is None else witness.residual,
    )
