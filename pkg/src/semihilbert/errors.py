"""Exception types shared across the package."""


class SemiHilbertError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(SemiHilbertError):
    """A square matrix was required."""


class NotHermitian(SemiHilbertError):
    """The matrix failed the Hermitian symmetry check."""


class NotPositive(SemiHilbertError):
    """The matrix has an eigenvalue below the negative tolerance band."""


class DimensionMismatch(SemiHilbertError):
    """Operands have incompatible dimensions."""


class NotSemiHilbertian(SemiHilbertError):
    """The operator does not map the null space of A into itself, so the
    weighted operator seminorm, adjoint, and numerical radius are not
    available (the radius may be unbounded)."""


class NonConvergence(SemiHilbertError):
    """An iterative routine exhausted its iteration budget."""


class ZeroRank(SemiHilbertError):
    """A = 0: no vector has unit A-seminorm, so the weighted numerical
    range is empty by convention."""


class NotProportional(SemiHilbertError):
    """The operator pair is not a unimodular multiple of each other after
    weighting by A^(1/2), so the requested check does not apply."""


class HypothesisViolated(SemiHilbertError):
    """Sampling refuted the rank-one radius-equality hypothesis.

    Carries the refuting vector in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MatrixFileError(SemiHilbertError):
    """A matrix document failed to parse or validate."""
