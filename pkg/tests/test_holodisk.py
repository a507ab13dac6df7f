"""Unit tests for the scalar/vector disk expression tree and its bounds."""

from __future__ import annotations

import math

import numpy as np
import pytest

from diskcheck import (
    Add,
    BallAutomorphism,
    Blaschke,
    BoundaryPoint,
    CMul,
    ComposeAut,
    Const,
    DomainError,
    Embed,
    Identity,
    Mul,
    ParseError,
    Poly,
    Vec,
    affine_disk,
    affine_rigidity_check,
    analytic_radial_derivative,
    blaschke_product,
    boundary_bound_origin,
    boundary_bound_shifted,
    certify_in_ball,
    extremal_family_1d,
    growth_margin,
    growth_margins,
    julia_margin,
    julia_margins,
    nonreal_parameter_strictness,
    parse_disk,
    radial_derivative_estimate,
    schwarz_derivative_bound,
    sup_boundary_norm,
    two_sided_quotient_check,
    vnorm,
)


def rng_for(index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((4321, index)))


class TestEvaluation:
    def test_blaschke_value_and_derivative(self):
        b = Blaschke(0.5)
        assert complex(b.eval(0.3)[0]) == pytest.approx(16.0 / 23.0, rel=1e-15)
        f = Mul(Identity(), b)
        assert complex(f.deriv(0.3)[0]) == pytest.approx(458.0 / 529.0, rel=1e-14)

    def test_poly_and_const(self):
        p = Poly([0.0, 0.0, 1.0])
        assert complex(p.eval(0.5j)[0]) == pytest.approx(-0.25)
        assert complex(p.deriv(0.5j)[0]) == pytest.approx(1.0j)
        assert complex(Const(0.25 + 0.25j).deriv(0.9)[0]) == 0.0

    def test_vector_nodes(self):
        u = np.asarray([0.6, 0.8j])
        f = affine_disk(u)
        out = f.eval(0.5)
        assert np.allclose(out, 0.5 * u)
        assert f.dim == 2
        g = Vec([Identity(), Poly([0.0, 0.0, 1.0])])
        assert np.allclose(g.eval(0.5), [0.5, 0.25])
        assert np.allclose(g.deriv(0.5), [1.0, 1.0])

    def test_composition_with_automorphism(self):
        aut = BallAutomorphism([0.5, 0.0])
        f = ComposeAut(aut, affine_disk([1.0, 0.0]))
        assert np.allclose(f.eval(0.0), [0.5, 0.0])
        assert float(vnorm(f.eval(0.5))) < 1e-15
        h = 1e-6
        fd = (f.eval(0.3 + h) - f.eval(0.3 - h)) / (2.0 * h)
        assert float(vnorm(fd - f.deriv(0.3))) < 1e-8

    def test_batched_evaluation_shape(self):
        f = Vec([Identity(), Blaschke(0.2)])
        zs = np.asarray([0.1, 0.2j, -0.3])
        assert f.eval(zs).shape == (3, 2)
        assert f.deriv(zs).shape == (3, 2)

    def test_blaschke_parameter_validation(self):
        with pytest.raises(DomainError):
            Blaschke(1.0)
        with pytest.raises(DomainError):
            extremal_family_1d(1.0)
        with pytest.raises(DomainError):
            extremal_family_1d(-0.1)


class TestSerialization:
    CASES = [
        "z",
        "mul(z, blaschke(0.5))",
        "poly(0, 0.5, 0.25)",
        "add(cmul(0.5, z), cmul(0.5j, poly(0, 0, 1)))",
        "scale(mul(z, blaschke(0.3)), u=[0.6, 0.8j])",
        "vec(z, poly(0, 0, 1), blaschke(0.1))",
        "compose(phi(a=[0.25, 0.25j]), scale(z, u=[1, 0]))",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_round_trip_is_textually_stable(self, text):
        f = parse_disk(text)
        again = parse_disk(f.to_text())
        assert again.to_text() == f.to_text()
        zs = np.asarray([0.1, -0.2 + 0.3j, 0.5j])
        assert np.allclose(f.eval(zs), again.eval(zs), atol=1e-15)

    def test_parse_rejects_malformed_text(self):
        for bad in ("", "mul(z", "frob(z)", "blaschke(2)", "scale(z, v=[1])",
                    "compose(psi(a=[0]), z)", "poly()"):
            with pytest.raises((ParseError, DomainError)):
                parse_disk(bad)

    def test_family_text_form(self):
        f = extremal_family_1d(0.5)
        assert f.to_text() == "mul(z, blaschke(0.5))"


class TestBoundary:
    def test_sup_norm_of_inner_functions_is_one(self):
        for f in (Identity(), Blaschke(0.3), extremal_family_1d(0.7), affine_disk([0.6, 0.8])):
            assert sup_boundary_norm(f) == pytest.approx(1.0, abs=1e-12)
            assert certify_in_ball(f) <= 1.0 + 1e-12

    def test_boundary_point_tagging(self):
        p = BoundaryPoint.for_disk(extremal_family_1d(0.4), 1.0)
        assert p.on_sphere
        q = BoundaryPoint.for_disk(CMul(0.5, Identity()), 1.0)
        assert not q.on_sphere
        with pytest.raises(DomainError):
            BoundaryPoint(zeta=0.5)


class TestGrowthBound:
    def test_zero_margin_along_positive_axis_for_family(self):
        f = Embed(extremal_family_1d(0.3), [1.0, 0.0])
        rep = growth_margin(f, 0.7)
        assert abs(rep.margin) < 1e-14
        assert rep.passed

    def test_equality_for_affine_disks_everywhere(self):
        f = affine_disk([0.6, 0.8j])
        rng = rng_for(1)
        zs = 0.95 * (rng.random(200) * np.exp(2j * np.pi * rng.random(200)))
        assert float(np.max(np.abs(growth_margins(f, zs)))) < 1e-13

    def test_nonnegative_on_random_products(self):
        rng = rng_for(2)
        for _ in range(20):
            cs = 0.7 * (rng.random(2) * np.exp(2j * np.pi * rng.random(2)))
            f = blaschke_product(cs, include_z=True, fix_one=False)
            zs = 0.97 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
            assert float(np.min(growth_margins(f, zs))) > -1e-12

    def test_requires_origin_fixing_and_interior_points(self):
        with pytest.raises(DomainError):
            growth_margins(Blaschke(0.5), [0.1])
        with pytest.raises(DomainError):
            growth_margins(Identity(), [1.0])


class TestTwoSidedBound:
    def test_oracle_values_at_half(self):
        f = Mul(Identity(), Blaschke(0.4))
        rep = two_sided_quotient_check(f, 0.5)
        assert rep.lhs == pytest.approx(0.75, rel=1e-14)
        assert rep.rhs == pytest.approx(0.75, rel=1e-14)
        assert abs(rep.margin) < 1e-14
        # (A - |z|)/(1 - A|z|) < 0 here, so the lower bound clamps to zero.
        assert rep.extra["lower_margin"] == pytest.approx(0.75, rel=1e-14)
        assert rep.extra["deriv0_norm"] == pytest.approx(0.4, rel=1e-14)

    def test_scalar_lower_bound_holds_near_origin(self):
        f = Mul(Identity(), Blaschke(0.8))
        rng = rng_for(3)
        zs = 0.3 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
        zs = zs[np.abs(zs) > 1e-3]
        for z in zs:
            rep = two_sided_quotient_check(f, z)
            assert rep.margin > -1e-12
            assert rep.extra["lower_margin"] > -1e-12


class TestBoundaryDerivativeBounds:
    def test_origin_bound_equalities(self):
        for a in np.linspace(0.0, 0.9, 10):
            f = extremal_family_1d(a)
            rep = boundary_bound_origin(f, 1.0)
            assert abs(rep.margin) < 1e-12
            assert rep.rhs == pytest.approx(2.0 / (1.0 + a), rel=1e-14)

    def test_origin_bound_strict_for_rotated_parameter(self):
        rep = nonreal_parameter_strictness(0.5j)
        assert rep.margin == pytest.approx(0.5 / 1.875, rel=1e-12)
        assert rep.extra["closed_form"] == pytest.approx(rep.margin, abs=1e-12)
        closed = 2 * 0.5 * (1 - math.cos(math.pi / 2)) * 0.5 / ((1 + 0.25) * 1.5)
        assert rep.extra["closed_form"] == pytest.approx(closed, rel=1e-14)

    def test_origin_bound_requires_contact(self):
        with pytest.raises(DomainError):
            boundary_bound_origin(CMul(0.5, Identity()), 1.0)
        with pytest.raises(DomainError):
            boundary_bound_origin(Blaschke(0.5), 1.0)

    def test_shifted_bound_is_tight_for_blaschke_factors(self):
        rep = boundary_bound_shifted(Blaschke(0.5), 1.0)
        assert rep.rhs == pytest.approx(1.0 / 3.0, rel=1e-14)
        assert rep.lhs == pytest.approx(1.0 / 3.0, rel=1e-14)
        assert abs(rep.margin) < 1e-14
        # scalar floor (1 - r)/(1 + r) with r = 1/2
        assert rep.extra["floor_bound"] == pytest.approx(1.0 / 3.0, rel=1e-14)

    def test_shifted_bound_floor_depends_on_dimension(self):
        f2 = Embed(Blaschke(0.5), [1.0, 0.0])
        rep2 = boundary_bound_shifted(f2, 1.0)
        r = 0.5
        floor2 = 2 * (1 - r) ** 2 / (1 - r * r + math.sqrt(1 - r * r))
        assert rep2.extra["floor_bound"] == pytest.approx(floor2, rel=1e-14)
        assert rep2.extra["floor_bound"] < rep2.rhs + 1e-15
        assert rep2.margin >= -1e-12

    def test_shifted_bound_on_random_products(self):
        rng = rng_for(4)
        for _ in range(20):
            c = 0.8 * rng.random() * np.exp(2j * np.pi * rng.random())
            rep = boundary_bound_shifted(Blaschke(c), complex(np.exp(2j * np.pi * rng.random())))
            assert rep.margin > -1e-10
            assert rep.extra["floor_margin"] >= rep.margin - 1e-12


class TestSchwarzAndJulia:
    def test_derivative_bound_at_origin(self):
        rep = schwarz_derivative_bound(Blaschke(0.5))
        assert rep.lhs == pytest.approx(0.75, rel=1e-14)
        assert rep.rhs == pytest.approx(math.sqrt(0.75), rel=1e-14)
        assert rep.margin > 0.0

    def test_julia_oracle_for_square(self):
        f = Poly([0.0, 0.0, 1.0])
        rep = julia_margin(f, 0.5j)
        assert rep.extra["deriv_at_one"] == pytest.approx(2.0, rel=1e-14)
        assert rep.rhs == pytest.approx(10.0 / 3.0, rel=1e-14)
        assert rep.margin == pytest.approx(5.0 / 3.0, rel=1e-14)

    def test_single_factor_equality_and_product_strictness(self):
        rng = rng_for(5)
        zs = 0.8 * np.sqrt(rng.random(200)) * np.exp(2j * np.pi * rng.random(200))
        single = blaschke_product([0.3 + 0.2j], fix_one=True)
        assert float(np.max(np.abs(julia_margins(single, zs)))) < 1e-12
        double = blaschke_product([0.3 + 0.2j, -0.4], fix_one=True)
        assert float(np.min(julia_margins(double, zs))) > 1e-7

    def test_julia_preconditions(self):
        with pytest.raises(DomainError):
            julia_margin(affine_disk([1.0, 0.0]), 0.1)
        with pytest.raises(DomainError):
            julia_margin(CMul(-1.0, Identity()), 0.1)
        with pytest.raises(DomainError):
            julia_margins(Identity(), [1.0])


class TestRadialEstimate:
    @pytest.mark.parametrize(
        "build,expected",
        [
            (lambda: Poly([0.0, 0.0, 1.0]), 2.0),
            (lambda: affine_disk([0.6, 0.8]), 1.0),
            (lambda: extremal_family_1d(0.5), 4.0 / 3.0),
        ],
    )
    def test_matches_analytic_value(self, build, expected):
        f = build()
        est, err = radial_derivative_estimate(f, 1.0)
        assert analytic_radial_derivative(f, 1.0) == pytest.approx(expected, rel=1e-12)
        assert abs(est - expected) < max(err, 1e-6)

    def test_schedule_validation(self):
        with pytest.raises(DomainError):
            radial_derivative_estimate(Identity(), 1.0, schedule=[0.5, 0.4, 0.6])
        with pytest.raises(DomainError):
            radial_derivative_estimate(Identity(), 1.0, schedule=[0.5, 0.6])


class TestAffineRigidity:
    def test_affine_disks_pass_with_zero_deviation(self):
        rep = affine_rigidity_check(affine_disk([0.6, 0.8j]))
        assert rep.extra["applicable"]
        assert abs(rep.margin) < 1e-12

    def test_expanding_maps_are_reported_inapplicable(self):
        for f in (extremal_family_1d(0.5), Poly([0.0, 0.0, 1.0]), Blaschke(0.3)):
            rep = affine_rigidity_check(f)
            assert not rep.extra["applicable"]
            assert rep.passed


class TestExtremalFamily:
    def test_family_normalization(self):
        for a in (0.0, 0.3, 0.9):
            f = extremal_family_1d(a)
            assert complex(f.eval(1.0)[0]) == pytest.approx(1.0, abs=1e-14)
            assert complex(f.deriv(1.0)[0]) == pytest.approx(2.0 / (1.0 + a), rel=1e-14)
            assert complex(f.deriv(0.0)[0]) == pytest.approx(a, abs=1e-14)
        assert extremal_family_1d(0.0).to_text() == "mul(z, blaschke(0.0))"

    def test_blaschke_product_fixes_one(self):
        f = blaschke_product([0.3 + 0.2j, -0.1j], include_z=True, fix_one=True)
        assert complex(f.eval(1.0)[0]) == pytest.approx(1.0, abs=1e-13)
        with pytest.raises(DomainError):
            blaschke_product([], include_z=False)
