import math

import numpy as np
import pytest

from starlike_radius.analytic import Family, extremal_member, log_derivative_member
from starlike_radius.regions import NAMED, ParameterError, Region, RegionKind, catalog_regions
from starlike_radius.radii import (
    Exactness,
    RadiusQuery,
    bisection_radius,
    closed_form_radius,
    janowski_radius,
    numeric_radius,
    radius_report,
    sharpness_points,
    sharpness_witness,
    univalence_witness,
)

E = math.e
SQRT2 = math.sqrt(2)

# mpmath values at 30 digits
FROZEN = {
    (Family.T1, RegionKind.EXP): 0.29647505447621644084,
    (Family.T1, RegionKind.SINE): 0.35937707119481306830,
    (Family.T1, RegionKind.LUNE): 0.28084679575027876879,
    (Family.T1, RegionKind.RATIONAL): 0.10264157656169101198,
    (Family.T1, RegionKind.SIGMOID): 0.23551965566894655706,
    (Family.T2, RegionKind.RATIONAL): 0.057190958417936632572,
    (Family.T2, RegionKind.LUNE): 0.19526214587563498300,
}

CATALOG = [RadiusQuery(f, r) for f in Family for r in catalog_regions()]
ORACLE_GRID = CATALOG + [
    RadiusQuery(f, Region(kind, alpha=a)) for f in Family
    for kind in (RegionKind.HALFPLANE, RegionKind.DISC) for a in (0.0, 0.25, 0.5, 0.75)
]


def qid(q):
    return f"{q.family.value}-{q.region.label}"


class TestClosedForms:
    def test_halfplane(self):
        assert closed_form_radius(RadiusQuery("t1", Region.halfplane(0))) == pytest.approx(0.4, rel=1e-15)
        assert closed_form_radius(RadiusQuery("t2", Region.halfplane(0.25))) == pytest.approx(0.25, rel=1e-15)

    @pytest.mark.parametrize("key", list(FROZEN), ids=lambda k: f"{k[0].value}-{k[1].value}")
    def test_frozen_values(self, key):
        fam, kind = key
        assert closed_form_radius(RadiusQuery(fam, Region(kind))) == pytest.approx(FROZEN[key], rel=1e-14)

    def test_rounded_decimal_values(self):
        assert round(closed_form_radius(RadiusQuery("t1", Region(RegionKind.SINE))), 5) == 0.35938
        assert round(closed_form_radius(RadiusQuery("t1", Region(RegionKind.EXP))), 6) == 0.296475
        assert round(closed_form_radius(RadiusQuery("t1", Region(RegionKind.LUNE))), 6) == 0.280847
        assert round(closed_form_radius(RadiusQuery("t1", Region(RegionKind.RATIONAL))), 6) == 0.102642
        assert round(closed_form_radius(RadiusQuery("t1", Region(RegionKind.SIGMOID))), 5) == 0.23552

    def test_rational_t2_formula(self):
        got = closed_form_radius(RadiusQuery("t2", Region(RegionKind.RATIONAL)))
        assert got == pytest.approx((3 - 2 * SQRT2) / 3, rel=1e-15)
        assert got == pytest.approx(0.0571910, abs=1e-7)

    def test_simple_fractions(self):
        expect = {
            RegionKind.PARABOLA: (1 / 4, 1 / 6), RegionKind.CARDIOID: (4 / 13, 2 / 9),
            RegionKind.NEPHROID: (4 / 13, 2 / 9), RegionKind.EXP: (None, (E - 1) / (3 * E)),
            RegionKind.SINE: (None, math.sin(1) / 3), RegionKind.SIGMOID: (None, (E - 1) / (3 * (1 + E))),
        }
        for kind, pair in expect.items():
            for fam, value in zip(Family, pair):
                if value is not None:
                    assert closed_form_radius(RadiusQuery(fam, Region(kind))) == pytest.approx(value, rel=1e-15)

    def test_alpha_monotone(self):
        for fam in Family:
            vals = [closed_form_radius(RadiusQuery(fam, Region.halfplane(a))) for a in np.linspace(0, 0.99, 100)]
            assert all(a > b for a, b in zip(vals, vals[1:]))
            assert vals[-1] < 0.01


class TestNumeric:
    @pytest.mark.parametrize("query", ORACLE_GRID, ids=qid)
    def test_agrees_with_closed_form(self, query):
        assert abs(numeric_radius(query) - closed_form_radius(query)) <= 1e-8

    @pytest.mark.parametrize("query", CATALOG, ids=qid)
    def test_bisection_oracle(self, query):
        assert abs(bisection_radius(query) - closed_form_radius(query)) <= 1e-8

    def test_examples(self):
        assert numeric_radius(RadiusQuery("t1", Region(RegionKind.CARDIOID)), 1e-10) == pytest.approx(4 / 13, abs=1e-8)
        assert numeric_radius(RadiusQuery("t2", Region(RegionKind.RATIONAL)), 1e-10) == pytest.approx(
            (3 - 2 * SQRT2) / 3, abs=1e-8)

    def test_degenerate_disc(self):
        assert 0 < numeric_radius(RadiusQuery("t1", Region.disc(0.999))) < 1e-3

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            numeric_radius(RadiusQuery("t1", Region.disc(0.5)), tol=0)

    @pytest.mark.parametrize("fam", list(Family))
    def test_halfplane_equals_disc(self, fam):
        for alpha in np.linspace(0, 0.95, 20):
            h = numeric_radius(RadiusQuery(fam, Region.halfplane(alpha)))
            d = numeric_radius(RadiusQuery(fam, Region.disc(alpha)))
            assert abs(h - d) <= 1e-10

    @pytest.mark.parametrize("fam", list(Family))
    def test_parabola_equals_order_half(self, fam):
        par = numeric_radius(RadiusQuery(fam, Region(RegionKind.PARABOLA)))
        assert abs(par - numeric_radius(RadiusQuery(fam, Region.halfplane(0.5)))) <= 1e-8


class TestJanowski:
    def test_examples(self):
        assert janowski_radius("t1", 1, -1) == (pytest.approx(0.4, rel=1e-15), Exactness.EXACT)
        assert janowski_radius("t1", 0.5, -0.5) == (pytest.approx(4 / 13, rel=1e-15), Exactness.EXACT)
        assert janowski_radius("t2", 1, 0) == (pytest.approx(1 / 3, rel=1e-15), Exactness.LOWER_BOUND_ONLY)

    @pytest.mark.parametrize("A", [0.0, 0.25, 0.5, 0.75, 1.0])
    @pytest.mark.parametrize("B", [-0.9, -0.7, -0.5, -0.3, -0.1])
    def test_negative_b_formula(self, A, B):
        assert janowski_radius("t1", A, B)[0] == pytest.approx(2 * (A - B) / (3 + 2 * A - 5 * B), rel=1e-14)
        assert janowski_radius("t2", A, B)[0] == pytest.approx((A - B) / (3 * (1 - B)), rel=1e-14)

    @pytest.mark.parametrize("A", np.linspace(0.1, 1.0, 10))
    def test_b_minus_one_matches_halfplane(self, A):
        half = closed_form_radius(RadiusQuery("t1", Region.halfplane((1 - A) / 2)))
        assert abs(janowski_radius("t1", A, -1)[0] - half) <= 1e-12
        assert abs(janowski_radius("t1", A, -1)[0] - (1 + A) / (4 + A)) <= 1e-12

    def test_nonnegative_b_is_lower_bound(self):
        q = RadiusQuery("t1", Region.janowski(0.8, 0.2))
        value, exactness = janowski_radius("t1", 0.8, 0.2)
        assert exactness is Exactness.LOWER_BOUND_ONLY
        assert value == pytest.approx(2 * 0.6 / (3 * 1.2 + 1.2), rel=1e-15)
        assert radius_report(q).witness_z is None
        with pytest.raises(ValueError):
            sharpness_witness(q)

    def test_invalid_parameters(self):
        with pytest.raises(ParameterError):
            janowski_radius("t1", 0.2, 0.5)


class TestSharpness:
    @pytest.mark.parametrize("query", [q for q in ORACLE_GRID], ids=qid)
    def test_witness_on_boundary(self, query):
        assert sharpness_witness(query).residual <= 1e-9

    def test_halfplane_identity(self):
        for alpha in (0.0, 0.25, 0.5, 0.75):
            R = 2 * (1 - alpha) / (5 - 2 * alpha)
            assert (2 - 5 * R) / (2 - 2 * R) == pytest.approx(alpha, abs=1e-15)
            w = log_derivative_member(extremal_member("t1"), -R)
            assert w.real == pytest.approx(alpha, abs=1e-14)

    def test_nephroid(self):
        w = sharpness_witness(RadiusQuery("t2", Region(RegionKind.NEPHROID)))
        assert w.z == pytest.approx(-2 / 9)
        assert w.value == pytest.approx(1 / 3, abs=1e-15)

    def test_lune_common_value(self):
        w = sharpness_witness(RadiusQuery("t1", Region(RegionKind.LUNE))).value
        assert abs(abs(w * w - 1) - 2 * abs(w)) <= 1e-12
        assert round(2 * abs(w), 3) == 0.828

    def test_sine_checks_both_signs_for_t2(self):
        q = RadiusQuery("t2", Region(RegionKind.SINE))
        R = closed_form_radius(q)
        assert sharpness_points(q, R) == [-R, R]
        w_plus = log_derivative_member(extremal_member("t2"), R)
        assert w_plus == pytest.approx(1 + math.sin(1), abs=1e-15)

    @pytest.mark.parametrize("kind", NAMED, ids=lambda k: k.value)
    def test_witness_is_minus_r(self, kind):
        for fam in Family:
            q = RadiusQuery(fam, Region(kind))
            assert sharpness_points(q, 0.2)[0] == -0.2


class TestUnivalence:
    def test_values(self):
        assert abs(univalence_witness("t1") + 0.4) <= 1e-12
        assert abs(univalence_witness("t2") + 1 / 3) <= 1e-12

    @pytest.mark.parametrize("fam", list(Family))
    def test_equals_order_zero_radius(self, fam):
        assert abs(abs(univalence_witness(fam)) - closed_form_radius(RadiusQuery(fam, Region.halfplane(0)))) <= 1e-12


class TestReport:
    def test_to_dict_fields(self):
        data = radius_report(RadiusQuery("t1", Region(RegionKind.CARDIOID))).to_dict()
        assert data["closed_form_expr"] == "4/13"
        assert data["exactness"] == "exact"
        assert data["witness_z"] == [-4 / 13, 0.0]
        assert 0 < data["numeric"] < 1
        assert data["radius_residual"] <= 1e-8
