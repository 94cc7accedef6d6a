"""Radii of starlikeness for the subordinate-ratio classes T1 and T2."""

from .analytic import (
    ClassMember,
    DomainError,
    FactorKind,
    Family,
    SchwarzMap,
    SubordinateFactor,
    eval_factor,
    eval_member,
    eval_schwarz,
    eval_schwarz_deriv,
    extremal_member,
    log_derivative_factor,
    log_derivative_member,
)
from .bounds import (
    ModulusRange,
    exp_factor_bound,
    factor_modulus_range,
    invert_member_bound,
    member_bound,
    member_growth_range,
    sqrt_factor_bound,
)
from .radii import (
    Exactness,
    RadiusQuery,
    RadiusReport,
    closed_form_radius,
    janowski_radius,
    numeric_radius,
    radius_report,
    sharpness_witness,
    univalence_witness,
)
from .regions import (
    ParameterError,
    Region,
    RegionKind,
    boundary_point,
    contains,
    disc_in_disc,
    disc_in_region,
    inradius_about_one,
)

__version__ = "0.1.0"
