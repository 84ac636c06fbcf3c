"""Unit tests for the weighted-space context and its operations."""

import numpy as np
import pytest

from conftest import gauss, make_ctx, make_member, rand_psd

from semihilbert import (DimensionMismatch, NotHermitian, NotPositive,
                         NotSemiHilbertian, new_context, spectral_norm)

SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])
LOWER = np.array([[1.0, 0.0], [1.0, 1.0]])


class TestNewContext:
    def test_identity(self):
        ctx = new_context(np.eye(3))
        assert ctx.rank == 3
        np.testing.assert_allclose(ctx.A_half, np.eye(3), atol=1e-12)

    def test_projection_weight(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        assert ctx.rank == 1
        col = ctx.range_basis[:, 0]
        assert abs(abs(col[0]) - 1.0) < 1e-12 and abs(col[1]) < 1e-12

    def test_square_root_reconstructs(self):
        a = np.array([[2.0, 1.0], [1.0, 1.0]])
        ctx = new_context(a)
        assert ctx.rank == 2
        assert np.max(np.abs(ctx.A_half @ ctx.A_half - a)) <= 1e-8 * (1 + 2.0)

    def test_half_pinv_gives_projector(self):
        rng = np.random.default_rng(0)
        a = rand_psd(rng, 5, rank=3)
        ctx = new_context(a)
        proj = ctx.range_basis @ ctx.range_basis.conj().T
        assert np.max(np.abs(ctx.A_half_pinv @ ctx.A_half - proj)) <= 1e-8

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            new_context(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_negative(self):
        with pytest.raises(NotPositive):
            new_context(np.diag([1.0, -1.0]))

    def test_clamps_tolerance_band(self):
        tol = 1e-8
        ctx = new_context(np.diag([1.0, -tol / 4]), tol)
        assert ctx.rank == 1
        assert np.all(ctx.pos_eigs > 0)

    def test_zero_weight(self):
        ctx = new_context(np.zeros((2, 2)))
        assert ctx.rank == 0
        assert ctx.compress(SWAP).shape == (0, 0)
        assert ctx.seminorm([1.0, 2.0]) == 0.0
        assert ctx.classify(SWAP).in_semihilbert


class TestSemiInner:
    def test_identity_is_euclidean(self):
        ctx = new_context(np.eye(2))
        x = np.array([1.0 + 2.0j, 3.0])
        y = np.array([0.5, -1.0j])
        assert abs(ctx.semi_inner(x, y) - np.vdot(y, x)) < 1e-14

    def test_null_vector_annihilates(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        assert ctx.semi_inner([0.0, 7.0], [3.0, 1.0j]) == 0.0

    def test_direct_evaluation(self):
        ctx = new_context(np.diag([2.0, 1.0]))
        assert abs(ctx.semi_inner([1.0, 1.0], [1.0, 0.0]) - 2.0) < 1e-14

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(1)
        ctx = new_context(rand_psd(rng, 4))
        for _ in range(20):
            x, y = gauss(rng, 4), gauss(rng, 4)
            lhs = ctx.semi_inner(x, y)
            rhs = np.conj(ctx.semi_inner(y, x))
            assert abs(lhs - rhs) < 1e-12

    def test_dimension_mismatch(self):
        ctx = new_context(np.eye(2))
        with pytest.raises(DimensionMismatch):
            ctx.semi_inner([1.0, 0.0, 0.0], [1.0, 0.0])


class TestSeminorm:
    def test_zero_vector(self):
        ctx = new_context(np.eye(2))
        assert ctx.seminorm([0.0, 0.0]) == 0.0

    def test_null_space_vector(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        assert ctx.seminorm([0.0, 5.0]) == 0.0

    def test_direct_evaluation(self):
        ctx = new_context(np.diag([4.0, 1.0]))
        assert abs(ctx.seminorm([1.0, 1.0]) - np.sqrt(5.0)) < 1e-12

    def test_matches_weighted_euclidean(self):
        rng = np.random.default_rng(2)
        ctx = new_context(rand_psd(rng, 5, rank=3))
        for _ in range(30):
            x = gauss(rng, 5)
            assert abs(ctx.seminorm(x) - np.linalg.norm(ctx.A_half @ x)) <= 1e-10

    def test_cauchy_schwarz(self):
        rng = np.random.default_rng(3)
        ctx = new_context(rand_psd(rng, 4, rank=2))
        for _ in range(50):
            x, y = gauss(rng, 4), gauss(rng, 4)
            lhs = abs(ctx.semi_inner(x, y))
            assert lhs <= ctx.seminorm(x) * ctx.seminorm(y) + 1e-9


class TestClassify:
    def test_invertible_weight_accepts_all(self):
        rng = np.random.default_rng(4)
        ctx = new_context(rand_psd(rng, 3) + 0.5 * np.eye(3))
        for _ in range(10):
            assert ctx.classify(gauss(rng, 3, 3)).in_semihilbert

    def test_swap_counterexample(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        verdict = ctx.classify(SWAP)
        assert not verdict.in_semihilbert
        assert verdict.violation_norm > 0.5

    def test_lower_triangular_member(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        assert ctx.classify(LOWER).in_semihilbert

    def test_verdict_invariant_under_weight_scaling(self):
        rng = np.random.default_rng(5)
        a = rand_psd(rng, 4, rank=3)
        t_member = make_member(new_context(a), seed=5)
        for c in (1e-3, 1.0, 1e3):
            ctx = new_context(c * a)
            assert ctx.classify(t_member).in_semihilbert
            assert not ctx.classify(_bad(ctx)).in_semihilbert

    def test_threshold_consistency(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        verdict = ctx.classify(SWAP)
        threshold = ctx.tol * (1 + 1.0) * (1 + 1.0)
        assert verdict.in_semihilbert == (verdict.violation_norm <= threshold)


def _bad(ctx):
    """An operator guaranteed to push mass from N(A) into the range."""
    if ctx.rank == ctx.dim:
        return np.zeros((ctx.dim, ctx.dim))
    return np.outer(ctx.range_basis[:, 0], ctx.null_basis[:, 0].conj())


class TestCompress:
    def test_identity_weight_is_identity_map(self):
        rng = np.random.default_rng(6)
        ctx = new_context(np.eye(3))
        t = gauss(rng, 3, 3)
        np.testing.assert_allclose(ctx.compress(t), t, atol=1e-12)

    def test_projection_weight(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        np.testing.assert_allclose(ctx.compress(LOWER), [[1.0]], atol=1e-12)

    def test_diagonal_operator_commutes(self):
        ctx = new_context(np.diag([4.0, 1.0]))
        t = np.diag([2.0 + 1.0j, -3.0])
        c = ctx.compress(t)
        # diagonal operators commute with the weight scaling
        np.testing.assert_allclose(np.sort_complex(np.diag(c)),
                                   np.sort_complex(np.diag(t)), atol=1e-12)

    def test_rejects_non_member(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        with pytest.raises(NotSemiHilbertian):
            ctx.compress(SWAP)

    def test_intertwining(self):
        rng = np.random.default_rng(7)
        for ensemble in ("invertible", "rank_deficient"):
            ctx = make_ctx(5, ensemble, seed=7)
            t = make_member(ctx, seed=8)
            c = ctx.compress(t)
            v = ctx.range_basis
            lifted = v @ c @ v.conj().T
            dev = np.max(np.abs(ctx.A_half @ t - lifted @ ctx.A_half))
            assert dev <= 1e-8 * (1 + np.max(np.abs(ctx.A))) * (1 + np.max(np.abs(t)))

    def test_multiplicative(self):
        ctx = make_ctx(4, "rank_deficient", seed=9)
        t = make_member(ctx, seed=10)
        s = make_member(ctx, seed=11)
        lhs = ctx.compress(t @ s)
        rhs = ctx.compress(t) @ ctx.compress(s)
        assert np.max(np.abs(lhs - rhs)) <= 1e-8 * (1 + np.max(np.abs(lhs)))

    def test_range_coordinates_preserve_inner_product(self):
        rng = np.random.default_rng(12)
        ctx = make_ctx(5, "rank_deficient", seed=12)
        d_half = np.sqrt(ctx.pos_eigs)
        for _ in range(20):
            x = ctx.A @ gauss(rng, 5)  # x in R(A)
            y = ctx.A @ gauss(rng, 5)
            cx = d_half * (ctx.range_basis.conj().T @ x)
            cy = d_half * (ctx.range_basis.conj().T @ y)
            assert abs(ctx.semi_inner(x, y) - np.vdot(cy, cx)) <= 1e-10 * (
                1 + abs(ctx.semi_inner(x, y)))


class TestOperatorSeminorm:
    def test_identity_operator(self):
        ctx = make_ctx(3, "rank_deficient", seed=13)
        assert abs(ctx.a_operator_seminorm(np.eye(3)) - 1.0) < 1e-10

    def test_projection_weight_lower_triangular(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        assert abs(ctx.a_operator_seminorm(LOWER) - 1.0) < 1e-12

    def test_monte_carlo_lower_bound(self):
        """Samples of ||Tx||_A / ||x||_A over R(A) never beat the seminorm,
        and a maximizer-seeded stratum reaches it."""
        rng = np.random.default_rng(14)
        ctx = make_ctx(4, "invertible", seed=14)
        t = make_member(ctx, seed=15)
        nrm = ctx.a_operator_seminorm(t)
        best = 0.0
        for _ in range(10_000):
            x = ctx.A @ gauss(rng, 4)
            denom = ctx.seminorm(x)
            if denom < 1e-9:
                continue
            best = max(best, ctx.seminorm(t @ x) / denom)
        assert best <= nrm + 1e-9
        assert best >= 0.5 * nrm  # uniform sampling gets within a factor
        # seeded stratum: ratio at the pulled-back top singular direction
        c = ctx.compress(t)
        from semihilbert import herm_eig
        top = herm_eig(c.conj().T @ c).vectors[:, 0]
        x_star = ctx.range_basis @ (top / np.sqrt(ctx.pos_eigs))
        ratio = ctx.seminorm(t @ x_star) / ctx.seminorm(x_star)
        assert abs(ratio - nrm) <= 1e-3

    def test_rejects_non_member(self):
        ctx = new_context(np.diag([1.0, 0.0]))
        with pytest.raises(NotSemiHilbertian):
            ctx.a_operator_seminorm(SWAP)
