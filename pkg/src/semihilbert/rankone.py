"""Weighted rank-one operators x (x)_A y : z -> <z, y>_A x.

The matrix form is the outer product ``x (Ay)*``; such operators
annihilate N(A), so they are always semi-Hilbertian.  Their weighted
numerical radius has the closed form
``(|<x, y>_A| + ||x||_A ||y||_A) / 2``, which generalizes the classical
rank-one radius and is cross-checked against the certified sweep in the
tests.
"""

from typing import NamedTuple

import numpy as np

from .adjoint import sharp
from .linalg import max_abs, spectral_norm
from .space import SemiHilbertContext


class RankOnePair(NamedTuple):
    """The (x, y) data of a weighted rank-one operator."""

    x: np.ndarray
    y: np.ndarray


def materialize(ctx: SemiHilbertContext, pair: RankOnePair) -> np.ndarray:
    """Matrix ``x (Ay)*`` of the weighted rank-one operator."""
    x = ctx.check_vector(pair.x)
    y = ctx.check_vector(pair.y)
    return np.outer(x, np.conj(ctx.A @ y))


def closed_form_radius(ctx: SemiHilbertContext, pair: RankOnePair) -> float:
    """Weighted numerical radius ``(|<x, y>_A| + ||x||_A ||y||_A) / 2``."""
    x = ctx.check_vector(pair.x)
    y = ctx.check_vector(pair.y)
    return 0.5 * (abs(ctx.semi_inner(x, y)) + ctx.seminorm(x) * ctx.seminorm(y))


def compressed_coordinates(ctx: SemiHilbertContext, v) -> np.ndarray:
    """Coordinates ``D^(1/2) V* v`` of a vector on the range space.

    The coordinate map turns the semi-inner product into the standard
    one, and sends a weighted rank-one operator to the ordinary outer
    product of the two coordinate vectors.
    """
    v = ctx.check_vector(v)
    return np.sqrt(ctx.pos_eigs) * (ctx.range_basis.conj().T @ v)


def rankone_algebra_check(ctx: SemiHilbertContext, pair: RankOnePair, t,
                          tol: float = 1e-8) -> bool:
    """Verify the rank-one algebra against an operator T.

    Checks, at scaled tolerance:
      * seminorm product: ``||x (x)_A y||_A = ||x||_A ||y||_A``;
      * adjoint swap: ``(x (x)_A y)^sharp = y (x)_A x``.  The swap names
        an adjoint only up to operators of zero A-seminorm; the reduced
        adjoint is exactly ``(Py) (x)_A x`` with P the range projector,
        which is what the comparison uses;
      * absorption: ``T (x (x)_A y) = (Tx) (x)_A y`` and
        ``(x (x)_A y) T = x (x)_A (T^sharp y)``;
      * compression: the compressed matrix is the ordinary outer product
        of the coordinate vectors of x and y.

    T must be semi-Hilbertian (NotSemiHilbertian otherwise).
    """
    t = ctx.require_member(t)
    x = ctx.check_vector(pair.x)
    y = ctx.check_vector(pair.y)
    k = materialize(ctx, pair)
    scale = ((1.0 + max_abs(ctx.A)) * (1.0 + max_abs(t))
             * (1.0 + max_abs(x)) * (1.0 + max_abs(y)))
    atol = tol * scale

    norm_gap = abs(ctx.a_operator_seminorm(k) - ctx.seminorm(x) * ctx.seminorm(y))
    if norm_gap > atol:
        return False
    swapped = materialize(ctx, RankOnePair(ctx.range_projector @ y, x))
    if max_abs(sharp(ctx, k) - swapped) > atol:
        return False
    if max_abs(t @ k - materialize(ctx, RankOnePair(t @ x, y))) > atol:
        return False
    sharp_y = sharp(ctx, t) @ y
    if max_abs(k @ t - materialize(ctx, RankOnePair(x, sharp_y))) > atol:
        return False
    expected = np.outer(compressed_coordinates(ctx, x),
                        np.conj(compressed_coordinates(ctx, y)))
    if max_abs(ctx.compress(k) - expected) > atol:
        return False
    return True
