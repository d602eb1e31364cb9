"""Dense complex linear algebra and bracketed scalar solvers."""

from .linalg import ComplexMatrix, matrix_arithmetic, operator_norm, operator_norms
from .solvers import Bracket, bisect_root, golden_section, minimize_1d

__all__ = [
    "ComplexMatrix",
    "matrix_arithmetic",
    "operator_norm",
    "operator_norms",
    "Bracket",
    "bisect_root",
    "golden_section",
    "minimize_1d",
]
