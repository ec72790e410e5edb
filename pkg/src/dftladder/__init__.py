"""Eigenvectors of the 5-point DFT from sparse ladder operators, with an independent verifier."""

from .claims import ClaimsReport, run_claims
from .core import DimensionError, build_named_matrix, dft_matrix, fifth_root_constants
from .ladder import EigenPair, EigenSystem5, closed_form_spectrum, ladder_eigensystem, newton_vector, power_formula
from .oracle import eigenvector_match, hermitian_eigensolver, oracle_eigensystem
from .precision import BINARY64, PrecisionConfig
from .sparse import SparseMatrix, sparse_apply, split

__version__ = "0.1.0"

__all__ = [
    "BINARY64",
    "ClaimsReport",
    "DimensionError",
    "EigenPair",
    "EigenSystem5",
    "PrecisionConfig",
    "SparseMatrix",
    "build_named_matrix",
    "closed_form_spectrum",
    "dft_matrix",
    "eigenvector_match",
    "fifth_root_constants",
    "hermitian_eigensolver",
    "ladder_eigensystem",
    "newton_vector",
    "oracle_eigensystem",
    "power_formula",
    "run_claims",
    "sparse_apply",
    "split",
]
