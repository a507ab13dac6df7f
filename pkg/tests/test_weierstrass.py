"""Unit tests for conformal minimal disks built from polynomial data."""

from __future__ import annotations

import math

import numpy as np
import pytest

from diskcheck import (
    DomainError,
    WeierstrassDisk,
    antiderivative_quadrature_residual,
    boundary_minimal_margin,
    distance_decreasing_margin,
    distance_decreasing_margins,
    enneper_disk,
    halfsphere_chain_check,
    interior_growth_margin,
    inverse_lipschitz_check,
    isothermal_report,
    load_weierstrass,
    metric_identity_audit,
    null_condition_report,
    planar_disk,
    poincare_dist,
    rotated_planar_disk,
    save_weierstrass,
    scaled_into_ball,
    surface_point,
    surface_sample,
    translated_planar_disk,
    vnorm,
)


def rng_for(index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((5678, index)))


def random_surface(rng: np.random.Generator) -> WeierstrassDisk:
    p = rng.normal(size=3) + 1j * rng.normal(size=3)
    q = 0.4 * (rng.normal(size=2) + 1j * rng.normal(size=2))
    return scaled_into_ball(WeierstrassDisk(p, q))


def disk_points(rng: np.random.Generator, n: int, rmax: float = 0.95) -> np.ndarray:
    return rmax * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


class TestEvaluation:
    def test_planar_disk_is_the_flat_unit_disk(self):
        w = planar_disk()
        z = 0.3 - 0.4j
        assert np.allclose(w.eval(z), [0.3, 0.4, 0.0], atol=1e-15)
        assert w.conformal_factor(z) == pytest.approx(1.0, rel=1e-15)
        assert w.max_norm() == pytest.approx(1.0, abs=1e-12)

    def test_enneper_value_at_one(self):
        w = enneper_disk()
        assert np.allclose(w.eval(1.0), [1.0 / 3.0, 0.0, 0.5], atol=1e-15)
        assert w.max_norm() == pytest.approx(2.0 / 3.0, abs=1e-10)

    def test_base_point_offset(self):
        w = translated_planar_disk(0.4)
        assert np.allclose(w.eval(0.0), [0.4, 0.0, 0.0], atol=1e-15)
        assert np.allclose(w.eval(1.0), [1.0, 0.0, 0.0], atol=1e-14)

    def test_partials_match_finite_differences(self):
        rng = rng_for(1)
        w = random_surface(rng)
        h = 1e-6
        for z in disk_points(rng, 5, 0.8):
            f_x, f_y = w.partials(z)
            fx_fd = (w.eval(z + h) - w.eval(z - h)) / (2 * h)
            fy_fd = (w.eval(z + 1j * h) - w.eval(z - 1j * h)) / (2 * h)
            assert float(np.max(np.abs(f_x - fx_fd))) < 1e-8
            assert float(np.max(np.abs(f_y - fy_fd))) < 1e-8

    def test_polar_frame_identities(self):
        rng = rng_for(2)
        w = random_surface(rng)
        for z in disk_points(rng, 5, 0.9):
            sp = surface_point(w, z)
            lam = sp.conformal_factor
            assert float(vnorm(sp.f_r)) == pytest.approx(lam, rel=1e-12)
            assert float(vnorm(sp.f_t)) == pytest.approx(abs(z) * lam, rel=1e-12)
            assert abs(float(np.dot(sp.f_r, sp.f_t))) < 1e-12 * max(lam, 1.0) ** 2
        with pytest.raises(DomainError):
            surface_point(w, 0.0)


class TestStructuralIdentities:
    def test_null_condition_is_algebraically_exact(self):
        rng = rng_for(3)
        for _ in range(10):
            rep = null_condition_report(random_surface(rng))
            assert rep.margin <= 1e-12
            assert rep.passed

    def test_isothermal_identities(self):
        rng = rng_for(4)
        for _ in range(5):
            w = random_surface(rng)
            rep = isothermal_report(w, disk_points(rng, 100))
            assert rep.margin <= 1e-10
            assert rep.passed

    def test_gauss_map_direction(self):
        n = rotated_planar_disk(0.5).gauss_normal(0.2 + 0.1j)
        assert np.allclose(n, [0.8, 0.0, 0.6], atol=1e-15)
        assert np.allclose(planar_disk().gauss_normal(0.3j), [0.0, 0.0, 1.0], atol=1e-15)
        rng = rng_for(5)
        w = random_surface(rng)
        for z in disk_points(rng, 20):
            nv = w.gauss_normal(z)
            assert float(np.linalg.norm(nv)) == pytest.approx(1.0, rel=1e-12)

    def test_metric_audit_ratio_is_a_quarter(self):
        rng = rng_for(6)
        for w in (planar_disk(), enneper_disk(), random_surface(rng)):
            _, _, ratio = metric_identity_audit(w, 0.3 + 0.4j)
            assert ratio == pytest.approx(0.25, rel=1e-12)
        lam_sq, bare, ratios = metric_identity_audit(enneper_disk(), disk_points(rng, 50))
        assert np.allclose(ratios, 0.25, rtol=1e-12)

    def test_antiderivative_matches_quadrature(self):
        rng = rng_for(7)
        w = random_surface(rng)
        for z in (0.7 + 0.2j, -0.5j, 0.99):
            assert antiderivative_quadrature_residual(w, z) < 1e-10


class TestInteriorGrowth:
    def test_translated_disk_oracle(self):
        rep = interior_growth_margin(translated_planar_disk(0.4), 0.5)
        assert rep.margin == pytest.approx(0.05, abs=1e-14)
        assert rep.extra["base_norm"] == pytest.approx(0.4, rel=1e-14)

    def test_centered_planar_equality_on_radii(self):
        w = planar_disk()
        for a in (0.3, -0.7j, 0.5 + 0.5j):
            rep = interior_growth_margin(w, a)
            assert abs(rep.margin) < 1e-12

    def test_rejects_surfaces_leaving_the_ball(self):
        big = WeierstrassDisk([4.0], [0.0])
        with pytest.raises(DomainError):
            interior_growth_margin(big, 0.5)
        with pytest.raises(DomainError):
            interior_growth_margin(planar_disk(), 1.0)


class TestDistanceDecreasing:
    def test_planar_anchored_and_diameter_equalities(self):
        w = planar_disk()
        rng = rng_for(8)
        zs = disk_points(rng, 50)
        anchored = distance_decreasing_margins(w, zs, np.zeros(50, dtype=complex))
        assert float(np.max(np.abs(anchored))) < 1e-12
        u = np.exp(0.7j)
        diam = distance_decreasing_margins(w, 0.6 * u * np.ones(5), np.linspace(-0.8, 0.4, 5) * u)
        assert float(np.max(np.abs(diam))) < 1e-12

    def test_planar_general_pair_probe_value(self):
        rep = distance_decreasing_margin(planar_disk(), 0.5, 0.5j)
        assert rep.margin == pytest.approx(0.04498442499009636, rel=1e-9)
        assert rep.margin > 0.04

    def test_enneper_margins_strictly_positive(self):
        rng = rng_for(9)
        w = enneper_disk()
        zs, ws = disk_points(rng, 200), disk_points(rng, 200)
        margins = distance_decreasing_margins(w, zs, ws)
        keep = np.abs(zs - ws) > 1e-3
        assert float(np.min(margins[keep])) > 1e-6
        assert float(np.min(margins)) > -1e-12

    def test_random_surfaces_never_expand(self):
        rng = rng_for(10)
        for _ in range(5):
            w = random_surface(rng)
            margins = distance_decreasing_margins(w, disk_points(rng, 200), disk_points(rng, 200))
            assert float(np.min(margins)) > -1e-10

    def test_interior_requirement(self):
        with pytest.raises(DomainError):
            distance_decreasing_margins(planar_disk(), [1.0], [0.0])


class TestBoundaryMinimal:
    def test_centered_planar_equality(self):
        rng = rng_for(11)
        for _ in range(10):
            zeta = complex(np.exp(2j * np.pi * rng.random()))
            rep = boundary_minimal_margin(planar_disk(), zeta)
            assert abs(rep.margin) < 1e-12

    def test_translated_margins(self):
        rep_in = boundary_minimal_margin(translated_planar_disk(0.4), 1.0)
        assert rep_in.margin == pytest.approx(0.17142857142857137, abs=1e-13)
        rep_orth = boundary_minimal_margin(translated_planar_disk(0.6, orthogonal=True), 1.0)
        assert rep_orth.margin == pytest.approx(0.55, abs=1e-13)

    def test_requires_sphere_contact(self):
        with pytest.raises(DomainError):
            boundary_minimal_margin(enneper_disk(), 1.0)
        with pytest.raises(DomainError):
            boundary_minimal_margin(translated_planar_disk(0.4), 1.0j)


class TestHalfsphereChain:
    def test_planar_corollary_margin(self):
        rep = halfsphere_chain_check(planar_disk())
        assert rep.extra["boundary_contact"]
        assert rep.extra["corollary_margin"] == pytest.approx(0.5, abs=1e-10)
        assert rep.extra["min_lambda"] == pytest.approx(1.0, rel=1e-12)
        assert rep.margin >= -1e-10

    def test_noncontact_surface_checks_link_margins_only(self):
        rep = halfsphere_chain_check(WeierstrassDisk([2.0, 1.0], [0.0, 0.5], halfsphere=True))
        assert not rep.extra["boundary_contact"]
        assert "corollary_margin" not in rep.extra
        assert rep.margin > -1e-8

    def test_preconditions(self):
        with pytest.raises(DomainError):
            halfsphere_chain_check(enneper_disk())  # |q| reaches 1 on the boundary
        with pytest.raises(DomainError):
            halfsphere_chain_check(WeierstrassDisk([0.0, 1.0], [0.0], halfsphere=True))

    def test_inverse_lipschitz_planar_factor_two(self):
        rep = inverse_lipschitz_check(planar_disk(), [(0.0, 0.5)])
        assert rep.extra["factor"] == pytest.approx(2.0, rel=1e-14)
        assert rep.margin == pytest.approx(0.5, abs=1e-12)

    def test_inverse_lipschitz_on_random_pairs(self):
        rng = rng_for(12)
        w = translated_planar_disk(0.3, orthogonal=True)
        pairs = list(zip(disk_points(rng, 30), disk_points(rng, 30)))
        rep = inverse_lipschitz_check(w, pairs)
        assert rep.margin > -1e-8
        with pytest.raises(DomainError):
            inverse_lipschitz_check(w, [])


class TestSerialization:
    def test_save_load_round_trip_is_bit_exact(self, tmp_path):
        rng = rng_for(13)
        w = random_surface(rng)
        path = tmp_path / "surface.wd"
        save_weierstrass(w, path)
        back = load_weierstrass(path)
        assert np.array_equal(back.p, w.p)
        assert np.array_equal(back.q, w.q)
        assert np.array_equal(back.base, w.base)
        assert back.halfsphere == w.halfsphere

    def test_flags_and_base_round_trip(self, tmp_path):
        w = translated_planar_disk(0.25, orthogonal=True)
        path = tmp_path / "surface.wd"
        save_weierstrass(w, path)
        back = load_weierstrass(path)
        assert back.halfsphere
        assert tuple(back.base) == (0.0, 0.0, 0.25)

    @pytest.mark.parametrize(
        "text",
        [
            "1.0 0.0\n[q]\n0.0 0.0\n",                      # data before any header
            "[p]\n1.0 0.0\n[q]\n",                            # missing q coefficients
            "[p]\n1.0\n[q]\n0.0 0.0\n",                      # malformed coefficient line
            "[p]\n1.0 0.0\n[q]\n0.0 0.0\n[flags]\nwibble\n",  # unknown flag
            "[p]\n1.0 0.0\n[q]\n0.0 0.0\n[base]\n1 2\n",      # bad base line
        ],
    )
    def test_malformed_files_are_rejected(self, tmp_path, text):
        path = tmp_path / "bad.wd"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(DomainError):
            load_weierstrass(path)

    def test_surface_sample_layout(self):
        rows = surface_sample(planar_disk(), n_radial=4, n_angular=8)
        assert rows.shape == (32, 6)
        x, y = rows[:, 0], rows[:, 1]
        assert np.allclose(rows[:, 2], x, atol=1e-14)
        assert np.allclose(rows[:, 3], -y, atol=1e-14)
        assert np.allclose(rows[:, 5], 1.0, atol=1e-14)


class TestScaling:
    def test_scaled_into_ball_hits_target_norm(self):
        w = scaled_into_ball(enneper_disk())
        assert w.max_norm() == pytest.approx(1.0 / (1.0 + 1e-6), rel=1e-9)
        assert w.max_norm() <= 1.0

    def test_poincare_vs_image_distance_consistency(self):
        # shrinking a surface shrinks image distances, never the parameter side
        rng = rng_for(14)
        w = scaled_into_ball(enneper_disk(), slack=1.0)  # max norm 1/2
        zs, ws = disk_points(rng, 50), disk_points(rng, 50)
        margins = distance_decreasing_margins(w, zs, ws)
        assert float(np.min(margins)) > 0.0
        assert float(np.min(poincare_dist(zs, ws))) >= 0.0
