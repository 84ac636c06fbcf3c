"""The seminormed space induced by a positive semidefinite matrix A.

A positive semidefinite A defines the semi-inner product
``<x, y>_A = <Ax, y>`` and the seminorm ``||x||_A = sqrt(<Ax, x>)``,
which vanishes exactly on the null space N(A).  A SemiHilbertContext
holds A together with its precomputed spectral data: the square root
A^(1/2), pseudoinverses, an orthonormal basis V of the range, and the
positive eigenvalues D, so every downstream operation is a couple of
matrix products.

Membership and the finite-dimensional collapse
----------------------------------------------
In infinite dimensions the operator classes "admits an A-adjoint",
"admits an A^(1/2)-adjoint", and "has finite A-operator seminorm" form a
strict chain.  When A acts on a finite-dimensional space its range is
closed, and the chain collapses: all three are equivalent to the single
condition T(N(A)) subset of N(A), equivalently A T P_N = 0 for the
orthogonal projector P_N onto N(A).  (If T preserves N(A), the range
inclusion R(T*A) subset of R(A) follows by taking orthogonal
complements, and the restricted supremum defining the operator seminorm
is a maximum over a compact set, hence finite.)  ``classify`` therefore
tests that one condition and decides membership in all of them at once.

Operators that pass the test compress to the coordinate space of the
range: with V the orthonormal eigenbasis of the positive eigenvalues D,
the matrix ``C = D^(1/2) V* T V D^(-1/2)`` represents the unique
operator on the weighted range space that intertwines multiplication by
A, and the A-operator seminorm of T equals the spectral norm of C.

Degenerate A = 0 is kept total: rank 0, every operator is a member,
``compress`` returns the 0 x 0 matrix, and all seminorms are zero.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, NotPositive, NotSemiHilbertian
from .linalg import as_matrix, as_vector, herm_eig, max_abs, spectral_norm

#: Default construction / membership tolerance.
DEFAULT_TOL = 1e-8


class OperatorClassification(NamedTuple):
    """Membership verdict for an operator against a context.

    ``violation_norm`` is ``||A T P_N||_max``; the operator is a member
    exactly when that norm falls below the scaled threshold.
    """

    in_semihilbert: bool
    violation_norm: float


@dataclass(frozen=True)
class SemiHilbertContext:
    """A validated positive semidefinite A with its spectral data.

    Instances are immutable and safe to share across threads; all
    methods are pure functions of their arguments.
    """

    A: np.ndarray
    A_half: np.ndarray
    A_half_pinv: np.ndarray
    A_pinv: np.ndarray
    rank: int
    range_basis: np.ndarray  # n x r, orthonormal columns
    pos_eigs: np.ndarray  # r positive reals, descending
    tol: float
    null_basis: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    @property
    def range_projector(self) -> np.ndarray:
        """Orthogonal projector onto R(A) (= R(A^(1/2)) here)."""
        return self.range_basis @ self.range_basis.conj().T

    @property
    def null_projector(self) -> np.ndarray:
        """Orthogonal projector onto N(A)."""
        return np.eye(self.dim, dtype=np.complex128) - self.range_projector

    def check_vector(self, x) -> np.ndarray:
        x = as_vector(x)
        if x.shape[0] != self.dim:
            raise DimensionMismatch(
                f"vector length {x.shape[0]} != context dimension {self.dim}"
            )
        return x

    def check_operator(self, t) -> np.ndarray:
        t = as_matrix(t)
        if t.shape != self.A.shape:
            raise DimensionMismatch(
                f"operator shape {t.shape} != context shape {self.A.shape}"
            )
        return t

    def semi_inner(self, x, y) -> complex:
        """Semi-inner product <Ax, y> (linear in x, conjugate-linear in y)."""
        x = self.check_vector(x)
        y = self.check_vector(y)
        return complex(np.vdot(y, self.A @ x))

    def seminorm(self, x) -> float:
        """A-seminorm sqrt(<Ax, x>); zero exactly on N(A) up to tol."""
        x = self.check_vector(x)
        val = np.real(np.vdot(x, self.A @ x))
        return float(np.sqrt(val)) if val > 0.0 else 0.0

    def classify(self, t) -> OperatorClassification:
        """Decide whether T belongs to the semi-Hilbertian class of A.

        Tests T(N(A)) subset of N(A) as ``||A T P_N||_max`` against the
        threshold ``tol * (1 + ||A||_max) * (1 + ||T||_max)``; by the
        finite-dimensional collapse (module docstring) this single test
        also decides the existence of the A-adjoint and the finiteness
        of the A-operator seminorm.
        """
        t = self.check_operator(t)
        violation = max_abs(self.A @ t @ self.null_projector)
        threshold = self.tol * (1.0 + max_abs(self.A)) * (1.0 + max_abs(t))
        return OperatorClassification(violation <= threshold, violation)

    def require_member(self, t) -> np.ndarray:
        """Validated T, raising NotSemiHilbertian when classify fails."""
        t = self.check_operator(t)
        verdict = self.classify(t)
        if not verdict.in_semihilbert:
            raise NotSemiHilbertian(
                "operator does not map N(A) into N(A) "
                f"(violation norm {verdict.violation_norm:.3e})"
            )
        return t

    def compress(self, t) -> np.ndarray:
        """Matrix of T on the weighted range space (r x r).

        Returns ``C = D^(1/2) V* T V D^(-1/2)``, the representation of
        the unique intertwiner C with ``C . (Ax) = A (Tx)`` in the
        orthonormal coordinates of the range space; exists if and only
        if T is semi-Hilbertian, hence the membership gate.
        """
        t = self.require_member(t)
        if self.rank == 0:
            return np.zeros((0, 0), dtype=np.complex128)
        d_half = np.sqrt(self.pos_eigs)
        v = self.range_basis
        inner = v.conj().T @ t @ v
        return (d_half[:, None] * inner) / d_half[None, :]

    def a_operator_seminorm(self, t) -> float:
        """A-operator seminorm: sup of ||Tx||_A over A-unit x in R(A).

        Equals the spectral norm of the compression.
        """
        return spectral_norm(self.compress(t))


def new_context(a, tol: float = DEFAULT_TOL) -> SemiHilbertContext:
    """Validate A and precompute its spectral data.

    A must be square and Hermitian with spectrum bounded below by
    ``-tol`` (relative to ``1 + lambda_max``); eigenvalues in the
    negative tolerance band are clamped to zero, anything lower raises
    NotPositive.  Eigenvalues above the same scaled tolerance count
    toward the rank and the range basis.
    """
    a = as_matrix(a)
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    eig = herm_eig(a)  # raises NotSquare / NotHermitian
    values = eig.values
    scale = 1.0 + (abs(values[0]) if values.size else 0.0)
    threshold = tol * scale
    if values.size and values[-1] < -threshold:
        raise NotPositive(
            f"eigenvalue {values[-1]:.6e} below -{threshold:.3e}"
        )
    clamped = np.clip(values, 0.0, None)
    positive = clamped > threshold
    rank = int(np.count_nonzero(positive))
    v = np.ascontiguousarray(eig.vectors[:, positive])
    w = np.ascontiguousarray(eig.vectors[:, ~positive])
    pos = clamped[positive]
    a_half = (v * np.sqrt(pos)[None, :]) @ v.conj().T
    a_half_pinv = (v / np.sqrt(pos)[None, :]) @ v.conj().T if rank else np.zeros_like(a)
    a_pinv = (v / pos[None, :]) @ v.conj().T if rank else np.zeros_like(a)
    return SemiHilbertContext(
        A=(a + a.conj().T) / 2.0,
        A_half=a_half,
        A_half_pinv=a_half_pinv,
        A_pinv=a_pinv,
        rank=rank,
        range_basis=v,
        pos_eigs=pos,
        tol=float(tol),
        null_basis=w,
    )
