"""Operator calculus in the seminormed space of a positive weight matrix.

A positive semidefinite matrix A induces the semi-inner product
``<x, y>_A = <Ax, y>``.  This package computes the objects that live in
the resulting seminormed space: A-seminorms, the semi-Hilbertian
operator class and its compression onto the range of A, reduced
A-adjoints, certified A-numerical radii and range boundaries, weighted
rank-one operators with their closed-form radius, and randomized
verification campaigns for the product-equivalence laws that tie radius
equality of TR and SR to unimodular proportionality of A^(1/2) T and
A^(1/2) S.
"""

from .errors import (DimensionMismatch, HypothesisViolated, MatrixFileError,
                     NonConvergence, NotHermitian, NotPositive,
                     NotProportional, NotSemiHilbertian, NotSquare,
                     SemiHilbertError, ZeroRank)
from .linalg import HermitianEigen, herm_eig, pinv, spectral_norm
from .space import (DEFAULT_TOL, OperatorClassification, SemiHilbertContext,
                    new_context)
from .adjoint import double_sharp_projection, sharp
from .numrange import (RadiusEstimate, RangeBoundary, a_radius,
                       a_radius_direct, a_range_boundary, classical_radius,
                       hull_support_distance, seminorm_radius_bounds_check)
from .rankone import (RankOnePair, closed_form_radius, compressed_coordinates,
                      materialize, rankone_algebra_check)
from .verifier import (CampaignConfig, EquivalenceVerdict, ProofReplayReport,
                       forward_check, generate_instance,
                       identity_comparison_check, make_equivalent_pair,
                       product_equivalence_check, random_a_unit,
                       random_context, random_semihilbertian, random_unitary,
                       range_equality_check, rankone_equivalence_check,
                       recover_lambda, replay_theorem_proof,
                       right_multiplication_check, separating_witness_search)

__version__ = "0.1.0"

__all__ = [
    "CampaignConfig",
    "DEFAULT_TOL",
    "DimensionMismatch",
    "EquivalenceVerdict",
    "HermitianEigen",
    "HypothesisViolated",
    "MatrixFileError",
    "NonConvergence",
    "NotHermitian",
    "NotPositive",
    "NotProportional",
    "NotSemiHilbertian",
    "NotSquare",
    "OperatorClassification",
    "ProofReplayReport",
    "RadiusEstimate",
    "RangeBoundary",
    "RankOnePair",
    "SemiHilbertContext",
    "SemiHilbertError",
    "ZeroRank",
    "a_radius",
    "a_radius_direct",
    "a_range_boundary",
    "classical_radius",
    "closed_form_radius",
    "compressed_coordinates",
    "double_sharp_projection",
    "forward_check",
    "generate_instance",
    "herm_eig",
    "hull_support_distance",
    "identity_comparison_check",
    "make_equivalent_pair",
    "materialize",
    "new_context",
    "pinv",
    "product_equivalence_check",
    "random_a_unit",
    "random_context",
    "random_semihilbertian",
    "random_unitary",
    "range_equality_check",
    "rankone_algebra_check",
    "rankone_equivalence_check",
    "recover_lambda",
    "replay_theorem_proof",
    "right_multiplication_check",
    "seminorm_radius_bounds_check",
    "separating_witness_search",
    "sharp",
    "spectral_norm",
]
