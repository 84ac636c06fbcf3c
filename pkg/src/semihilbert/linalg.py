"""Dense complex linear algebra core.

Matrices are plain ``numpy.ndarray`` values of dtype complex128 in the
usual row-major layout; every constructor path goes through
:func:`as_matrix`, which rejects non-finite entries.  The spectral engine
is a cyclic Jacobi diagonalization for complex Hermitian matrices (see
``_kernels``): self-contained, accurate to near machine precision, and
entirely adequate at the dimensions this package targets (a few hundred
at most).  The pseudoinverse and the spectral norm are both derived from
it.
"""

from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import NonConvergence, NotHermitian, NotSquare

#: Default relative singular-value cutoff for :func:`pinv`: comfortably
#: above the Jacobi residual, below any genuine singular value in the
#: ensembles this package works with.
DEFAULT_PINV_CUTOFF = 1e-10

_HERMITIAN_RTOL = 1e-12


class HermitianEigen(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and sorted descending; the columns of ``vectors``
    are the matching orthonormal eigenvectors.
    """

    values: np.ndarray
    vectors: np.ndarray


def as_matrix(obj) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(obj, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size and not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(obj) -> np.ndarray:
    """Coerce to a 1-D complex128 array, rejecting NaN/Inf entries."""
    v = np.asarray(obj, dtype=np.complex128).reshape(-1)
    if v.size and not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def max_abs(m: np.ndarray) -> float:
    """Largest entry magnitude; 0 for empty arrays."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def frob(m: np.ndarray) -> float:
    """Frobenius norm; 0 for empty arrays."""
    return float(np.linalg.norm(m.reshape(-1))) if m.size else 0.0


def herm_eig(h) -> HermitianEigen:
    """Eigendecomposition of a complex Hermitian matrix.

    The input must be square and satisfy
    ``||H - H*||_max <= 1e-12 * (1 + ||H||_max)``; it is symmetrized to
    (H + H*)/2 before iterating so that round-off asymmetry cannot feed
    the rotations.

    Raises NotSquare, NotHermitian, or NonConvergence (the last is not
    reachable for finite input at supported sizes).
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {h.shape}")
    dev = max_abs(h - h.conj().T)
    if dev > _HERMITIAN_RTOL * (1.0 + max_abs(h)):
        raise NotHermitian(f"symmetry deviation {dev:.3e} exceeds tolerance")
    n = h.shape[0]
    if n == 0:
        return HermitianEigen(np.empty(0), np.empty((0, 0), dtype=np.complex128))
    work = np.ascontiguousarray((h + h.conj().T) / 2.0)
    vecs = np.eye(n, dtype=np.complex128)
    status = _kernels.jacobi_inplace(work, vecs, True)
    if status != 0:
        raise NonConvergence("Jacobi sweep budget exhausted")
    values = np.real(np.diag(work))
    order = np.argsort(-values, kind="stable")
    return HermitianEigen(values[order].copy(), np.ascontiguousarray(vecs[:, order]))


def pinv(m, cutoff: float = DEFAULT_PINV_CUTOFF) -> np.ndarray:
    """Moore-Penrose pseudoinverse with a relative singular-value cutoff.

    Singular values below ``cutoff * sigma_max`` are treated as zero.
    The right-singular directions come from the Hermitian
    eigendecomposition of M*M, but each candidate singular value is
    re-measured as ``||M w_j||`` on its eigenvector: squaring the matrix
    floods eigenvalues below about 1e-13 * lambda_max with round-off,
    while the direct norm stays accurate down to machine precision, so
    the cutoff decision remains trustworthy for rank-deficient input.
    ``pinv(M) = W diag(1/sigma^2) W* M*`` over the retained directions;
    a zero matrix maps to a zero matrix.
    """
    m = as_matrix(m)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    gram = m.conj().T @ m
    eig = herm_eig(gram)
    if eig.values.size == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    sig = np.linalg.norm(m @ eig.vectors, axis=0)
    sig_max = float(np.max(sig))
    keep = (sig > cutoff * sig_max) & (sig > 0.0)
    if not np.any(keep):
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    w = eig.vectors[:, keep]
    inv = (w / (sig[keep] ** 2)[None, :]) @ w.conj().T
    return inv @ m.conj().T


def spectral_norm(m) -> float:
    """Largest singular value, via the eigendecomposition of M*M."""
    m = as_matrix(m)
    if m.size == 0:
        return 0.0
    gram = m.conj().T @ m
    top = herm_eig(gram).values
    lam = top[0] if top.size else 0.0
    return float(np.sqrt(lam)) if lam > 0.0 else 0.0
