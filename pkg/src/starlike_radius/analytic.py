"""Members of the classes T1 and T2 built from Schwarz functions.

A member is assembled as ``f(z) = z * p(z) * p1(z) * p2(z)`` where each factor
is ``h(w(z))`` for a Schwarz function ``w`` and ``h`` is either ``sqrt(1 + z)``
(class T1) or ``exp(z)`` (class T2).

Schwarz functions are realised as rotated finite Blaschke products

    w(z) = exp(i*phase) * z * prod_j (a_j - z) / (1 - conj(a_j) * z),

which fix the origin and satisfy ``|w(z)| <= |z|`` on the unit disc.

All evaluators accept a Python complex or a numpy array of complex points.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

ComplexLike = Union[complex, float, np.ndarray]

# Random Schwarz maps: Blaschke parameter moduli are kept away from the circle.
MAX_BLASCHKE_MODULUS = 0.95
MAX_BLASCHKE_FACTORS = 3


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class Family(str, enum.Enum):
    T1 = "t1"
    T2 = "t2"


class FactorKind(str, enum.Enum):
    SQRT_ONE_PLUS = "sqrt_one_plus"
    EXP = "exp"


FAMILY_KIND = {Family.T1: FactorKind.SQRT_ONE_PLUS, Family.T2: FactorKind.EXP}


def _as_complex(z: ComplexLike):
    if isinstance(z, np.ndarray):
        return z.astype(complex, copy=False)
    return complex(z)


def _check_disc(z) -> None:
    if np.any(~np.isfinite(np.abs(z))) or np.any(np.abs(z) >= 1.0):
        raise DomainError("point must lie in the open unit disc |z| < 1")


@dataclass(frozen=True)
class SchwarzMap:
    """Rotation times a finite Blaschke product with an extra zero at 0."""

    phase: float = 0.0
    params: tuple[complex, ...] = field(default_factory=tuple)

    def __post_init__(self):
        params = tuple(complex(a) for a in self.params)
        for a in params:
            if not abs(a) < 1.0:
                raise DomainError(f"Blaschke parameter {a} must satisfy |a| < 1")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "phase", float(self.phase) % (2.0 * math.pi))

    @property
    def is_identity(self) -> bool:
        return self.phase == 0.0 and not self.params


IDENTITY = SchwarzMap()


def _blaschke_terms(w_map: SchwarzMap, z):
    """Values b_j(z) and derivatives b_j'(z) of the individual Blaschke factors."""
    values, derivs = [], []
    for a in w_map.params:
        denom = 1.0 - a.conjugate() * z
        values.append((a - z) / denom)
        derivs.append((abs(a) ** 2 - 1.0) / denom**2)
    return values, derivs


def eval_schwarz(w_map: SchwarzMap, z: ComplexLike):
    """Evaluate the Schwarz function at ``z`` (|z| < 1)."""
    z = _as_complex(z)
    _check_disc(z)
    rotation = complex(math.cos(w_map.phase), math.sin(w_map.phase))
    values, _ = _blaschke_terms(w_map, z)
    out = rotation * z
    for b in values:
        out = out * b
    return out


def eval_schwarz_deriv(w_map: SchwarzMap, z: ComplexLike):
    """Analytic derivative ``w'(z)`` by the product rule over Blaschke factors.

    The product rule is applied without dividing by the factors, so the
    result stays finite at the zeros ``z = a_j``.
    """
    z = _as_complex(z)
    _check_disc(z)
    rotation = complex(math.cos(w_map.phase), math.sin(w_map.phase))
    values, derivs = _blaschke_terms(w_map, z)
    product = 1.0 + 0.0 * z
    for b in values:
        product = product * b
    # d/dz of prod_j b_j, one term per factor
    d_product = 0.0 * z
    for j, db in enumerate(derivs):
        term = db
        for k, b in enumerate(values):
            if k != j:
                term = term * b
        d_product = d_product + term
    return rotation * (product + z * d_product)


@dataclass(frozen=True)
class SubordinateFactor:
    """``p = h o w`` with ``h(z) = sqrt(1 + z)`` or ``h(z) = exp(z)``."""

    kind: FactorKind
    map: SchwarzMap = IDENTITY

    def __post_init__(self):
        object.__setattr__(self, "kind", FactorKind(self.kind))


def eval_factor(p: SubordinateFactor, z: ComplexLike):
    w = eval_schwarz(p.map, z)
    vector = isinstance(w, np.ndarray)
    if p.kind is FactorKind.SQRT_ONE_PLUS:
        # 1 + w stays in the right half-plane, so the principal root is analytic
        return np.sqrt(1.0 + w) if vector else cmath.sqrt(1.0 + w)
    return np.exp(w) if vector else cmath.exp(w)


def log_derivative_factor(p: SubordinateFactor, z: ComplexLike):
    """``z p'(z) / p(z)`` from the identities for ``p^2 = 1 + w`` and ``p = e^w``."""
    z = _as_complex(z)
    w = eval_schwarz(p.map, z)
    zdw = z * eval_schwarz_deriv(p.map, z)
    if p.kind is FactorKind.SQRT_ONE_PLUS:
        return zdw / (2.0 * (1.0 + w))
    return zdw


@dataclass(frozen=True)
class ClassMember:
    """``f(z) = z p(z) p1(z) p2(z)`` with all three factors of the family's kind."""

    family: Family
    factor_p: SubordinateFactor
    factor_p1: SubordinateFactor
    factor_p2: SubordinateFactor

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        want = FAMILY_KIND[family]
        for factor in self.factors:
            if factor.kind is not want:
                raise ValueError(f"{family.name} members need {want.value} factors, got {factor.kind.value}")

    @property
    def factors(self) -> tuple[SubordinateFactor, SubordinateFactor, SubordinateFactor]:
        return (self.factor_p, self.factor_p1, self.factor_p2)


def eval_member(f: ClassMember, z: ComplexLike):
    z = _as_complex(z)
    out = z
    for factor in f.factors:
        out = out * eval_factor(factor, z)
    return out


def eval_member_quotient(f: ClassMember, z: ComplexLike):
    """``f(z) / z = p p1 p2``, which is 1 at the origin."""
    z = _as_complex(z)
    out = 1.0 + 0.0 * z
    for factor in f.factors:
        out = out * eval_factor(factor, z)
    return out


def log_derivative_member(f: ClassMember, z: ComplexLike):
    """``z f'(z) / f(z) = 1 + sum of the factor log-derivatives``; exactly 1 at z = 0."""
    z = _as_complex(z)
    total = 1.0 + 0.0 * z
    for factor in f.factors:
        total = total + log_derivative_factor(factor, z)
    if isinstance(total, np.ndarray):
        total = np.where(z == 0, 1.0 + 0.0j, total)
    elif z == 0:
        total = 1.0 + 0.0j
    return total


def eval_member_deriv(f: ClassMember, z: ComplexLike):
    """``f'(z) = (f(z)/z) * (z f'(z)/f(z))``."""
    return eval_member_quotient(f, z) * log_derivative_member(f, z)


def extremal_member(family: Family | str) -> ClassMember:
    """``z (1 + z)^{3/2}`` for T1 and ``z e^{3z}`` for T2."""
    family = Family(family)
    factor = SubordinateFactor(FAMILY_KIND[family], IDENTITY)
    return ClassMember(family, factor, factor, factor)


def random_schwarz_map(
    rng: np.random.Generator,
    max_factors: int = MAX_BLASCHKE_FACTORS,
    max_modulus: float = MAX_BLASCHKE_MODULUS,
) -> SchwarzMap:
    n = int(rng.integers(0, max_factors + 1))
    phase = float(rng.uniform(0.0, 2.0 * math.pi))
    moduli = rng.uniform(0.0, max_modulus, size=n)
    args = rng.uniform(0.0, 2.0 * math.pi, size=n)
    params = tuple(complex(m * math.cos(t), m * math.sin(t)) for m, t in zip(moduli, args))
    return SchwarzMap(phase, params)


def random_factor(rng: np.random.Generator, kind: FactorKind | str) -> SubordinateFactor:
    return SubordinateFactor(FactorKind(kind), random_schwarz_map(rng))


def random_member(rng: np.random.Generator, family: Family | str) -> ClassMember:
    family = Family(family)
    kind = FAMILY_KIND[family]
    return ClassMember(family, *(random_factor(rng, kind) for _ in range(3)))
