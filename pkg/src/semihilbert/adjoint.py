"""Reduced A-adjoint of a semi-Hilbertian operator.

For a member T of the semi-Hilbertian class the equation ``A X = T* A``
has solutions; the reduced one, with range inside R(A), is singled out
by the closed formula ``X = pinv(A) T* A`` and satisfies
``<Tx, y>_A = <x, Xy>_A`` for all x, y.  The closed form is exactly the
pseudoinverse solution, so no least-squares iteration is needed.
"""

import numpy as np

from .errors import SemiHilbertError
from .linalg import max_abs
from .space import SemiHilbertContext

_RESIDUAL_RTOL = 1e-8


def _scaled_tol(ctx: SemiHilbertContext, t: np.ndarray) -> float:
    return _RESIDUAL_RTOL * (1.0 + max_abs(ctx.A)) * (1.0 + max_abs(t))


def sharp(ctx: SemiHilbertContext, t) -> np.ndarray:
    """Reduced A-adjoint ``pinv(A) T* A``.

    Raises NotSemiHilbertian when T is not a member, in which case no
    A-adjoint exists at all.
    """
    t = ctx.require_member(t)
    return ctx.A_pinv @ t.conj().T @ ctx.A


def double_sharp_projection(ctx: SemiHilbertContext, t) -> np.ndarray:
    """Apply the adjoint twice and check it equals P T P.

    The double adjoint of a member compresses T by the range projector
    P; the identity is asserted numerically (scaled 1e-8) before the
    result is returned.
    """
    t = ctx.require_member(t)
    twice = sharp(ctx, sharp(ctx, t))
    p = ctx.range_projector
    dev = max_abs(twice - p @ t @ p)
    if dev > _scaled_tol(ctx, t):
        raise SemiHilbertError(
            f"double-adjoint consistency failure: deviation {dev:.3e}"
        )
    return twice
