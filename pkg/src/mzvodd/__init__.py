"""Exact computations with the coefficient matrices of totally odd depth-graded MZVs."""
from .exact_linalg import KernelBasis, in_span, left_kernel, rank, right_kernel, span_dim
from .ihara import b_coeff, c_coeff, e_coeff, ihara_action
from .indices import IndexSet, RatVector, enumerate_indices, index_count
from .matrices import IntMatrix, build_C, build_E, build_Eq, build_F
from .polynomials import HomPolynomial, pi1, pi1_inverse
from .relations import Relation, cmd_relations
from .series import IntSeries, bk_coefficients, series_O, series_S

__version__ = "0.1.0"

__all__ = [
    "HomPolynomial", "IndexSet", "IntMatrix", "IntSeries", "KernelBasis", "RatVector", "Relation",
    "b_coeff", "bk_coefficients", "build_C", "build_E", "build_Eq", "build_F", "c_coeff", "cmd_relations",
    "e_coeff", "enumerate_indices", "ihara_action", "in_span", "index_count", "left_kernel", "pi1",
    "pi1_inverse", "rank", "right_kernel", "series_O", "series_S", "span_dim",
]
