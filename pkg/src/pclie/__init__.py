"""Exact construction and structure analysis of PC Lie algebras and
(reduced) contragredient Lie algebras."""

from .linalg import (Mat, complement_basis, format_scalar, kernel_basis, parse_scalar,
                     rank, rref)
from .pentad import (CartanPentad, Lemma1Report, PentadError, cartan_matrix, h_vectors,
                     lemma1, strip_zero_columns, validate)
from .graded import (GradedLieAlgebra, LocalPart, center_degree0, extend,
                     local_from_cartan, local_from_pentad, reduced_contragredient,
                     verify_jacobi, verify_transitivity)
from .oracle import oracle_dims
from .structure import (StructureReport, decompose, gamma_invariance, verify_lemma2,
                        verify_lemma3, verify_theorem2)
from .embed import ReductiveData, pentad_from_reductive, sl2_pentad

__version__ = "0.1.0"

__all__ = [
    "Mat", "complement_basis", "format_scalar", "kernel_basis", "parse_scalar", "rank",
    "rref", "CartanPentad", "Lemma1Report", "PentadError", "cartan_matrix", "h_vectors",
    "lemma1", "strip_zero_columns", "validate", "GradedLieAlgebra", "LocalPart",
    "center_degree0", "extend", "local_from_cartan", "local_from_pentad",
    "reduced_contragredient", "verify_jacobi", "verify_transitivity", "oracle_dims",
    "StructureReport", "decompose", "gamma_invariance", "verify_lemma2", "verify_lemma3",
    "verify_theorem2", "ReductiveData", "pentad_from_reductive", "sl2_pentad",
]
