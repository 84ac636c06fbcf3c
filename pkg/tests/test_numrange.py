"""Unit tests for the certified radius and range-boundary machinery."""

import math

import numpy as np
import pytest

from conftest import gauss, make_ctx, make_member

from semihilbert import (NonConvergence, NotSemiHilbertian, ZeroRank,
                         a_radius, a_radius_direct, a_range_boundary,
                         classical_radius, herm_eig, hull_support_distance,
                         new_context, random_a_unit,
                         seminorm_radius_bounds_check, spectral_norm)

SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])
LOWER = np.array([[1.0, 0.0], [1.0, 1.0]])
JORDAN = np.array([[0.0, 1.0], [0.0, 0.0]])


def sweep_value(m, theta):
    """Independent evaluation of lambda_max(Re(e^{i theta} M))."""
    e = complex(math.cos(theta), math.sin(theta))
    return herm_eig((e * m + (e * m).conj().T) / 2.0).values[0]


class TestClassicalRadius:
    def test_normal_matrix(self):
        est = classical_radius(np.diag([3.0, -1.0]), gap=1e-8)
        assert est.lower <= 3.0 <= est.upper
        assert est.upper - est.lower <= 1e-8

    def test_jordan_cell_half(self):
        est = classical_radius(JORDAN, gap=1e-7)
        assert abs(est.midpoint - 0.5) <= 1e-7

    def test_scaled_jordan_cell(self):
        est = classical_radius(2.0 * JORDAN, gap=1e-7)
        assert abs(est.midpoint - 1.0) <= 1e-7

    def test_bracket_and_witness(self):
        rng = np.random.default_rng(0)
        for n in (2, 3, 5):
            m = gauss(rng, n, n)
            est = classical_radius(m, grid=64, gap=1e-6)
            assert est.upper - est.lower <= 1e-6
            assert abs(np.linalg.norm(est.witness_vector) - 1.0) <= 1e-10
            rayleigh = abs(np.vdot(est.witness_vector, m @ est.witness_vector))
            assert rayleigh >= est.lower - 1e-9
            assert rayleigh <= est.upper + 1e-9

    def test_grid_too_small(self):
        with pytest.raises(ValueError):
            classical_radius(JORDAN, grid=3)

    def test_nonconvergence_when_budget_exhausted(self, monkeypatch):
        import semihilbert.numrange as nr
        monkeypatch.setattr(nr, "REFINE_CAP", 2)
        with pytest.raises(NonConvergence):
            classical_radius(np.diag([3.0, -1.0]), gap=1e-12)

    def test_lipschitz_sweep(self):
        rng = np.random.default_rng(1)
        m = gauss(rng, 4, 4)
        sigma = spectral_norm(m)
        for _ in range(50):
            t1, t2 = rng.uniform(0, 2 * math.pi, 2)
            lhs = abs(sweep_value(m, t1) - sweep_value(m, t2))
            assert lhs <= sigma * abs(t1 - t2) + 1e-12


class TestARadius:
    def test_counterexample_rejected(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        with pytest.raises(NotSemiHilbertian):
            a_radius(ctx, SWAP)

    def test_projection_weight_single_point(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        est = a_radius(ctx, LOWER, gap=1e-8)
        assert abs(est.midpoint - 1.0) <= 1e-8

    def test_identity_weight_matches_classical(self):
        rng = np.random.default_rng(2)
        ctx = new_context(np.eye(4))
        t = gauss(rng, 4, 4)
        est_a = a_radius(ctx, t, gap=1e-7)
        est_c = classical_radius(t, gap=1e-7)
        assert abs(est_a.midpoint - est_c.midpoint) <= 2e-7

    def test_zero_weight_degenerate(self):
        ctx = new_context(np.zeros((2, 2)))
        est = a_radius(ctx, SWAP)
        assert est.degenerate
        assert est.lower == est.upper == 0.0

    def test_witness_is_a_unit_and_attains(self):
        ctx = make_ctx(5, "rank_deficient", seed=3)
        t = make_member(ctx, seed=4)
        est = a_radius(ctx, t, grid=64, gap=1e-6)
        w = est.witness_vector
        assert abs(ctx.seminorm(w) - 1.0) <= 1e-9
        rayleigh = abs(ctx.semi_inner(t @ w, w))
        assert rayleigh >= est.lower - 1e-9
        assert rayleigh <= est.upper + 1e-9

    def test_rotation_equivariance(self):
        ctx = make_ctx(4, "rank_deficient", seed=5)
        t = make_member(ctx, seed=6)
        base = a_radius(ctx, t, grid=64, gap=1e-6)
        for phi in (0.3, 1.7, math.pi):
            rot = a_radius(ctx, np.exp(1j * phi) * t, grid=64, gap=1e-6)
            assert abs(rot.midpoint - base.midpoint) <= 2e-6

    def test_monte_carlo_sandwich(self):
        """Uniform A-unit samples never exceed the certified upper bound;
        witness-seeded strata reach within 5% of the lower bound."""
        rng = np.random.default_rng(7)
        ctx = make_ctx(5, "invertible", seed=7)
        t = make_member(ctx, seed=8)
        est = a_radius(ctx, t, grid=64, gap=1e-6)
        best = 0.0
        for _ in range(10_000):
            x = random_a_unit(ctx, rng)
            best = max(best, abs(ctx.semi_inner(t @ x, x)))
        assert best <= est.upper + 1e-9
        for amplitude in (0.5, 0.2, 0.05):
            for _ in range(200):
                x = est.witness_vector + amplitude * gauss(rng, 5)
                nrm = ctx.seminorm(x)
                if nrm < 1e-9:
                    continue
                x = x / nrm
                val = abs(ctx.semi_inner(t @ x, x))
                assert val <= est.upper + 1e-9
                best = max(best, val)
        assert best >= est.lower - 0.05 * est.lower


class TestRangeBoundary:
    def test_hermitian_segment(self):
        ctx = new_context(np.eye(2))
        boundary = a_range_boundary(ctx, np.diag([0.0, 1.0]), 32)
        assert np.max(np.abs(boundary.points.imag)) <= 1e-9
        assert np.min(boundary.points.real) >= -1e-9
        assert np.max(boundary.points.real) <= 1.0 + 1e-9
        assert abs(np.max(boundary.points.real) - 1.0) <= 1e-9

    def test_jordan_cell_circle(self):
        ctx = new_context(np.eye(2))
        boundary = a_range_boundary(ctx, JORDAN, 64)
        radii = np.abs(boundary.points)
        assert np.max(np.abs(radii - 0.5)) <= 1e-9

    def test_rank_one_compression_single_point(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        boundary = a_range_boundary(ctx, LOWER, 16)
        assert np.max(np.abs(boundary.points - 1.0)) <= 1e-9

    def test_zero_rank_raises(self):
        ctx = new_context(np.zeros((2, 2)))
        with pytest.raises(ZeroRank):
            a_range_boundary(ctx, SWAP, 8)

    def test_non_member_raises(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        with pytest.raises(NotSemiHilbertian):
            a_range_boundary(ctx, SWAP, 8)

    def test_witnesses_reproduce_points(self):
        ctx = make_ctx(4, "rank_deficient", seed=9)
        t = make_member(ctx, seed=10)
        boundary = a_range_boundary(ctx, t, 24)
        for k in range(24):
            w = boundary.witnesses[:, k]
            assert abs(ctx.seminorm(w) - 1.0) <= 1e-9
            assert abs(ctx.semi_inner(t @ w, w) - boundary.points[k]) <= 1e-9

    def test_double_resolution_containment(self):
        ctx = make_ctx(4, "invertible", seed=11)
        t = make_member(ctx, seed=12)
        coarse = a_range_boundary(ctx, t, 24)
        fine = a_range_boundary(ctx, t, 48)
        for p in coarse.points:
            assert hull_support_distance(p, fine.points) <= 1e-6

    def test_convexity_sampling(self):
        """Midpoints of sampled range values stay in the range's hull.

        The hull is evaluated through its exact support function
        h(theta) = lambda_max(Re(e^{-i theta} C)), computed directly by
        Hermitian eigendecomposition, so the containment bound is not
        limited by boundary-point resolution.
        """
        rng = np.random.default_rng(13)
        ctx = make_ctx(4, "rank_deficient", seed=13)
        t = make_member(ctx, seed=14)
        c = ctx.compress(t)
        n_dirs = 720
        angles = 2 * math.pi * np.arange(n_dirs) / n_dirs
        support = np.array([sweep_value(c, -th) for th in angles])
        values = []
        for _ in range(40):
            x = random_a_unit(ctx, rng)
            values.append(ctx.semi_inner(t @ x, x))
        for _ in range(200):
            z1, z2 = rng.choice(len(values) // 1, 2)
            mid = 0.5 * (values[z1] + values[z2])
            sep = np.real(np.exp(-1j * angles) * mid) - support
            assert np.max(sep) <= 1e-6


class TestSeminormRadiusBounds:
    def test_identity_operator(self):
        ctx = make_ctx(3, "rank_deficient", seed=15)
        assert seminorm_radius_bounds_check(ctx, np.eye(3))

    def test_jordan_cell_hits_lower_bound(self):
        ctx = new_context(np.eye(2))
        est = a_radius(ctx, JORDAN, gap=1e-7)
        nrm = ctx.a_operator_seminorm(JORDAN)
        assert abs(est.midpoint - 0.5 * nrm) <= 1e-6
        assert seminorm_radius_bounds_check(ctx, JORDAN)

    def test_random_members(self):
        for seed in range(16, 22):
            ctx = make_ctx(5, "rank_deficient" if seed % 2 else "invertible",
                           seed=seed)
            t = make_member(ctx, seed=seed + 100)
            assert seminorm_radius_bounds_check(ctx, t, grid=64, gap=1e-6)


class TestDirectRoute:
    def test_agrees_with_compression_route(self):
        for seed in range(22, 27):
            ctx = make_ctx(4, "rank_deficient" if seed % 2 else "invertible",
                           seed=seed)
            t = make_member(ctx, seed=seed + 200)
            mid_c = a_radius(ctx, t, grid=64, gap=1e-6).midpoint
            mid_d = a_radius_direct(ctx, t, grid=64, gap=1e-6).midpoint
            assert abs(mid_c - mid_d) <= 2e-6

    def test_direct_witness_attains(self):
        ctx = make_ctx(4, "invertible", seed=27)
        t = make_member(ctx, seed=28)
        est = a_radius_direct(ctx, t, grid=64, gap=1e-6)
        assert abs(ctx.seminorm(est.witness_vector) - 1.0) <= 1e-9
        rayleigh = abs(ctx.semi_inner(t @ est.witness_vector, est.witness_vector))
        assert rayleigh >= est.lower - 1e-9


class TestHullSupportDistance:
    def test_inside_point(self):
        cloud = np.array([0.0, 1.0, 1.0j, 1.0 + 1.0j])
        assert hull_support_distance(0.5 + 0.5j, cloud) == 0.0

    def test_outside_point(self):
        cloud = np.array([0.0, 1.0])
        d = hull_support_distance(2.0 + 0.0j, cloud)
        assert abs(d - 1.0) <= 1e-4

    def test_empty_cloud_rejected(self):
        with pytest.raises(ValueError):
            hull_support_distance(0.0, np.array([]))
