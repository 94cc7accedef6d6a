"""Target domains for ``z f'(z)/f(z)`` and geometric predicates on them.

Every catalog region contains the point 1.  Regions bounded by the image of
the unit circle under a superordinate map expose that parametrization through
:func:`boundary_point`; distances to the boundary are computed on a uniform
theta grid with golden-section refinement of the nearest local minima.
"""

from __future__ import annotations

import cmath
import enum
import functools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .analytic import DomainError

log = logging.getLogger(__name__)

BOUNDARY_GRID = 4096
WINDING_SEGMENTS = 4096
REFINED_MINIMA = 3
GOLDEN_TOL = 1e-12
EXCLUSION_BAND = 1e-10
# Subdivision used when a query point is close to the sampled boundary.
_WINDING_SPLIT = 16
_WINDING_MAX_DEPTH = 10

_K_RATIONAL = math.sqrt(2.0) + 1.0
_TWO_PI = 2.0 * math.pi


class ParameterError(ValueError):
    """Raised for region parameters outside their admissible range."""


class RegionKind(str, enum.Enum):
    HALFPLANE = "halfplane"
    DISC = "disc"
    JANOWSKI = "janowski"
    PARABOLA = "parabola"
    EXP = "exp"
    CARDIOID = "cardioid"
    SINE = "sine"
    LUNE = "lune"
    RATIONAL = "rational"
    NEPHROID = "nephroid"
    SIGMOID = "sigmoid"


PARAMETERISED = (RegionKind.HALFPLANE, RegionKind.DISC, RegionKind.JANOWSKI)
NAMED = tuple(k for k in RegionKind if k not in PARAMETERISED)

# Inradius about 1 of each named region, used as a reference for the numeric value.
INRADIUS_CLOSED_FORM = {
    RegionKind.PARABOLA: 0.5,
    RegionKind.EXP: 1.0 - math.exp(-1.0),
    RegionKind.CARDIOID: 2.0 / 3.0,
    RegionKind.SINE: math.sin(1.0),
    RegionKind.LUNE: 2.0 - math.sqrt(2.0),
    RegionKind.RATIONAL: 3.0 - 2.0 * math.sqrt(2.0),
    RegionKind.NEPHROID: 2.0 / 3.0,
    RegionKind.SIGMOID: (math.e - 1.0) / (math.e + 1.0),
}


@dataclass(frozen=True)
class Region:
    """A catalog domain; ``alpha`` for half-plane/disc, ``A`` and ``B`` for Janowski."""

    kind: RegionKind
    alpha: Optional[float] = None
    A: Optional[float] = None
    B: Optional[float] = None

    def __post_init__(self):
        kind = RegionKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in (RegionKind.HALFPLANE, RegionKind.DISC):
            if self.alpha is None:
                object.__setattr__(self, "alpha", 0.0)
            alpha = float(self.alpha)
            if not 0.0 <= alpha < 1.0:
                raise ParameterError("alpha must lie in [0,1)")
            object.__setattr__(self, "alpha", alpha)
        elif kind is RegionKind.JANOWSKI:
            A = 1.0 if self.A is None else float(self.A)
            B = -1.0 if self.B is None else float(self.B)
            if not -1.0 <= B < A <= 1.0:
                raise ParameterError("Janowski parameters must satisfy -1 <= B < A <= 1")
            object.__setattr__(self, "A", A)
            object.__setattr__(self, "B", B)
        if kind is not RegionKind.JANOWSKI and (self.A is not None or self.B is not None):
            raise ParameterError(f"A and B only apply to the janowski region, not {kind.value}")
        if kind not in (RegionKind.HALFPLANE, RegionKind.DISC) and self.alpha is not None:
            raise ParameterError(f"alpha only applies to halfplane and disc, not {kind.value}")

    @classmethod
    def halfplane(cls, alpha: float = 0.0) -> "Region":
        return cls(RegionKind.HALFPLANE, alpha=alpha)

    @classmethod
    def disc(cls, alpha: float = 0.0) -> "Region":
        return cls(RegionKind.DISC, alpha=alpha)

    @classmethod
    def janowski(cls, A: float = 1.0, B: float = -1.0) -> "Region":
        return cls(RegionKind.JANOWSKI, A=A, B=B)

    @property
    def params(self) -> dict:
        if self.kind in (RegionKind.HALFPLANE, RegionKind.DISC):
            return {"alpha": self.alpha}
        if self.kind is RegionKind.JANOWSKI:
            return {"A": self.A, "B": self.B}
        return {}

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        inner = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.kind.value}({inner})"

    @property
    def janowski_disc(self) -> tuple[float, float]:
        """Centre and radius of the Janowski image disc (requires B > -1)."""
        A, B = self.A, self.B
        return (1.0 - A * B) / (1.0 - B * B), (A - B) / (1.0 - B * B)

    @property
    def is_halfplane_like(self) -> bool:
        return self.kind is RegionKind.HALFPLANE or (self.kind is RegionKind.JANOWSKI and self.B == -1.0)

    @property
    def halfplane_level(self) -> float:
        """``c`` such that the region is ``Re w > c`` (half-plane or Janowski with B = -1)."""
        if self.kind is RegionKind.HALFPLANE:
            return self.alpha
        return (1.0 - self.A) / 2.0


def catalog_regions() -> list[Region]:
    """The ten regions of the reproduction table, with default parameters."""
    return [Region.halfplane(0.0), Region.janowski(1.0, -1.0)] + [Region(k) for k in NAMED]


# --- superordinate maps on the unit circle ---------------------------------


def _parabola_curve(theta):
    # sqrt(z) taken in the closed upper half-plane, i.e. exp(i theta / 2) for theta in [0, 2pi)
    theta = np.mod(theta, _TWO_PI)
    s = np.exp(0.5j * theta)
    with np.errstate(divide="ignore", invalid="ignore"):
        lg = np.log((1.0 + s) / (1.0 - s))
    return 1.0 + (2.0 / math.pi**2) * lg * lg


def _rational_curve(theta):
    z = np.exp(1j * theta)
    k = _K_RATIONAL
    return 1.0 + (k * z + z * z) / (k * k - k * z)


def _lune_curve(theta):
    z = np.exp(1j * theta)
    return z + np.sqrt(1.0 + z * z)


_MAP_CURVES: dict[RegionKind, Callable] = {
    RegionKind.PARABOLA: _parabola_curve,
    RegionKind.EXP: lambda t: np.exp(np.exp(1j * t)),
    RegionKind.CARDIOID: lambda t: 1.0 + 4.0 * np.exp(1j * t) / 3.0 + 2.0 * np.exp(2j * t) / 3.0,
    RegionKind.SINE: lambda t: 1.0 + np.sin(np.exp(1j * t)),
    RegionKind.LUNE: _lune_curve,
    RegionKind.RATIONAL: _rational_curve,
    RegionKind.NEPHROID: lambda t: 1.0 + np.exp(1j * t) - np.exp(3j * t) / 3.0,
    RegionKind.SIGMOID: lambda t: 2.0 / (1.0 + np.exp(-np.exp(1j * t))),
}


def _curve(region: Region) -> Callable:
    if region.is_halfplane_like:
        raise DomainError(f"{region.label} has an unbounded straight boundary; no circle parametrization")
    if region.kind is RegionKind.DISC:
        rho = 1.0 - region.alpha
        return lambda t: 1.0 + rho * np.exp(1j * np.asarray(t, dtype=float))
    if region.kind is RegionKind.JANOWSKI:
        a, b = region.janowski_disc
        return lambda t: a + b * np.exp(1j * np.asarray(t, dtype=float))
    return _MAP_CURVES[region.kind]


def boundary_point(region: Region, theta: float) -> complex:
    """The image of ``exp(i theta)`` under the region's superordinate map.

    Discs use the plain circle parametrization.  The parabola's boundary point
    for ``theta = 0`` is at infinity and raises :class:`DomainError`.
    """
    curve = _curve(region)
    if region.kind is RegionKind.PARABOLA and math.remainder(theta, _TWO_PI) == 0.0:
        raise DomainError("the parabola boundary point at theta = 0 is at infinity")
    return complex(curve(np.asarray([theta], dtype=float))[0])


@functools.lru_cache(maxsize=64)
def _boundary_grid(region: Region, n: int = BOUNDARY_GRID) -> tuple[np.ndarray, np.ndarray]:
    offset = 0.5 if region.kind is RegionKind.PARABOLA else 0.0
    thetas = (np.arange(n) + offset) * (_TWO_PI / n)
    return thetas, _curve(region)(thetas)


# --- distance to the boundary ------------------------------------------------


def golden_section_min(func: Callable[[float], float], a: float, b: float, tol: float = GOLDEN_TOL):
    """Minimise a unimodal ``func`` on ``[a, b]`` down to bracket width ``tol``."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = func(c), func(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = func(d)
        if c >= d:
            break
    x = c if fc <= fd else d
    return x, min(fc, fd)


def _nearest_on_curve(region: Region, w: complex) -> tuple[float, float]:
    """Distance from ``w`` to the parametrised boundary and the minimising theta."""
    thetas, pts = _boundary_grid(region)
    curve = _curve(region)
    d2 = np.abs(pts - w) ** 2
    n = len(d2)
    is_min = (d2 <= np.roll(d2, 1)) & (d2 <= np.roll(d2, -1))
    candidates = np.flatnonzero(is_min)
    candidates = candidates[np.argsort(d2[candidates], kind="stable")][:REFINED_MINIMA]
    step = _TWO_PI / n

    def sq_dist(t: float) -> float:
        p = complex(curve(np.asarray([t]))[0])
        return abs(p - w) ** 2

    best_t, best = float(thetas[candidates[0]]), float(d2[candidates[0]])
    for i in candidates:
        t0 = float(thetas[i])
        t, val = golden_section_min(sq_dist, t0 - step, t0 + step)
        if val < best:
            best_t, best = t, val
    return math.sqrt(best), best_t % _TWO_PI


def boundary_distance(region: Region, w: complex) -> float:
    """Euclidean distance from ``w`` to the boundary of ``region``."""
    w = complex(w)
    if region.is_halfplane_like:
        return abs(w.real - region.halfplane_level)
    if region.kind is RegionKind.DISC:
        return abs(abs(w - 1.0) - (1.0 - region.alpha))
    if region.kind is RegionKind.JANOWSKI:
        a, b = region.janowski_disc
        return abs(abs(w - a) - b)
    return _nearest_on_curve(region, w)[0]


@functools.lru_cache(maxsize=256)
def _cached_boundary_distance(region: Region, w: complex) -> float:
    return boundary_distance(region, w)


def inradius_about_one(region: Region) -> float:
    """Radius of the largest disc about 1 contained in ``region``."""
    if region.is_halfplane_like:
        return 1.0 - region.halfplane_level
    if region.kind is RegionKind.DISC:
        return 1.0 - region.alpha
    if region.kind is RegionKind.JANOWSKI:
        a, b = region.janowski_disc
        return b - abs(a - 1.0)
    return _numeric_inradius(region)


@functools.lru_cache(maxsize=64)
def _numeric_inradius(region: Region) -> float:
    dist, theta = _nearest_on_curve(region, 1.0 + 0.0j)
    nearest = boundary_point(region, theta)
    if abs(nearest.imag) > 1e-6:
        log.warning(
            "nearest boundary point of %s to 1 is off the real axis at %r (distance %.17g)",
            region.label, nearest, dist,
        )
    return dist


# --- membership ----------------------------------------------------------------


def _cardioid_margin(w: complex) -> float:
    u, v = w.real, w.imag
    s = 9.0 * (u * u + v * v)
    quad = s - 18.0 * u + 5.0
    lin = s - 6.0 * u + 1.0
    value = quad * quad - 16.0 * lin
    return -value / (quad * quad + 16.0 * abs(lin) + 1e-300)


def _nephroid_margin(w: complex) -> float:
    x, y = w.real - 1.0, w.imag
    core = x * x + y * y - 4.0 / 9.0
    value = core**3 - 4.0 * y * y / 3.0
    return -value / (abs(core) ** 3 + 4.0 * y * y / 3.0 + 1e-300)


def _slit_log(w: complex) -> Optional[complex]:
    """Principal log, or None on the closed negative real axis."""
    if w.imag == 0.0 and w.real <= 0.0:
        return None
    return cmath.log(w)


def _exp_margin(w: complex) -> float:
    lg = _slit_log(w)
    return -math.inf if lg is None else 1.0 - abs(lg)


def _sigmoid_margin(w: complex) -> float:
    if w == 2.0:
        return -math.inf
    lg = _slit_log(w / (2.0 - w))
    return -math.inf if lg is None else 1.0 - abs(lg)


def _janowski_margin(region: Region, w: complex) -> float:
    a, b = region.janowski_disc
    return b - abs(w - a)


def _lune_margin(w: complex) -> float:
    # the inequality is symmetric under w -> -w; only the component about 1 is the lune
    slack = 2.0 * abs(w) - abs(w * w - 1.0)
    return slack if w.real > 0 else -abs(slack)


_MARGINS: dict[RegionKind, Callable[[complex], float]] = {
    RegionKind.PARABOLA: lambda w: w.real - abs(w - 1.0),
    RegionKind.EXP: _exp_margin,
    RegionKind.CARDIOID: _cardioid_margin,
    RegionKind.LUNE: _lune_margin,
    RegionKind.NEPHROID: _nephroid_margin,
    RegionKind.SIGMOID: _sigmoid_margin,
}

WINDING_REGIONS = (RegionKind.SINE, RegionKind.RATIONAL)


@functools.lru_cache(maxsize=64)
def _winding_grid(region: Region, n: int = WINDING_SEGMENTS) -> tuple[np.ndarray, np.ndarray]:
    thetas = np.linspace(0.0, _TWO_PI, n + 1)
    pts = _curve(region)(thetas)
    pts[-1] = pts[0]
    return thetas, pts


def winding_number(region: Region, w: complex, n: int = WINDING_SEGMENTS) -> tuple[int, float]:
    """Winding number of the boundary curve about ``w`` and the distance to it.

    The closed curve is sampled at ``n`` segments; segments that pass within
    two segment lengths of ``w`` are subdivided repeatedly so the polygon
    cannot cross over the query point.
    """
    w = complex(w)
    curve = _curve(region)
    thetas, pts = _winding_grid(region, n)
    for _ in range(_WINDING_MAX_DEPTH):
        dist = np.abs(pts - w)
        seg = np.abs(np.diff(pts))
        near = np.minimum(dist[:-1], dist[1:]) < 2.0 * seg
        if not near.any():
            break
        idx = np.flatnonzero(near)
        pieces_t = [thetas[: idx[0] + 1]]
        for j, nxt in zip(idx, list(idx[1:]) + [len(thetas) - 1]):
            fine = np.linspace(thetas[j], thetas[j + 1], _WINDING_SPLIT + 1)[1:-1]
            pieces_t.append(fine)
            pieces_t.append(thetas[j + 1 : nxt + 1])
        new_t = np.concatenate(pieces_t)
        new_p = curve(new_t)
        new_p[-1] = new_p[0]
        thetas, pts = new_t, new_p
    d = pts - w
    dmin = float(np.min(np.abs(d)))
    if dmin == 0.0:
        return 0, 0.0
    turning = np.angle(d[1:] / d[:-1]).sum()
    return int(round(turning / _TWO_PI)), dmin


def margin(region: Region, w: complex) -> float:
    """Signed interior margin: positive inside, negative outside, zero on the boundary.

    For inequality-defined regions this is the slack of the defining inequality
    (scaled for the implicit curves); for winding-number regions it is the
    signed distance to the sampled boundary.
    """
    w = complex(w)
    if region.is_halfplane_like:
        return w.real - region.halfplane_level
    if region.kind is RegionKind.DISC:
        return (1.0 - region.alpha) - abs(w - 1.0)
    if region.kind is RegionKind.JANOWSKI:
        return _janowski_margin(region, w)
    if region.kind in WINDING_REGIONS:
        wn, dist = winding_number(region, w)
        return dist if wn == 1 else -dist
    return _MARGINS[region.kind](w)


def contains(region: Region, w: complex) -> bool:
    """True iff ``w`` is interior to ``region`` (boundary band excluded)."""
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        return False
    return margin(region, w) > EXCLUSION_BAND * max(1.0, abs(w))


# --- disc containment ----------------------------------------------------------


def disc_in_disc(c: complex, d: float, a: complex, b: float) -> bool:
    """``{|w - c| < d}`` lies in ``{|w - a| < b}`` iff ``|a - c| <= b - d``."""
    return abs(complex(a) - complex(c)) <= b - d


def disc_in_region(region: Region, center: complex, rho: float) -> bool:
    """True iff the closed disc of radius ``rho`` about ``center`` lies inside ``region``."""
    center = complex(center)
    if rho < 0:
        raise ValueError("rho must be non-negative")
    if not contains(region, center):
        raise ValueError(f"disc centre {center!r} is not inside {region.label}")
    if region.is_halfplane_like:
        return rho < center.real - region.halfplane_level
    if region.kind is RegionKind.DISC:
        return rho < (1.0 - region.alpha) - abs(center - 1.0)
    if region.kind is RegionKind.JANOWSKI:
        return rho < _janowski_margin(region, center)
    return rho < _cached_boundary_distance(region, center) - EXCLUSION_BAND
