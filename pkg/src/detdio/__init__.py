"""Exact integer-matrix tools for the Diophantine equation det([A; X]) = +-d."""

__version__ = "0.1.0"

from .divisor import greatest_divisor, greatest_divisor_ltf, greatest_divisor_minors
from .errors import (
    CapExceeded,
    DegenerateForm,
    DetdioError,
    DimensionMismatch,
    IndexOutOfRange,
    InternalError,
    InvalidInstance,
    NotSquare,
    ParseError,
    RankDeficient,
    ShapeError,
    Unsolvable,
)
from .linearform import (
    FormCompletion,
    LinearForm,
    cofactor_vector,
    complete_to_form,
    condition_equivalence_check,
    solve_linear,
)
from .ltf import LtfDecomposition, is_ltf, ltf_reduce, unimodular_inverse
from .matrix import (
    IntMat,
    determinant,
    determinant_cofactor,
    format_matrix,
    is_full_row_rank,
    maximal_minors,
    multiply,
    parse_matrix,
    rank,
)
from .solver import EquationInstance, Orientation, is_solvable, solve, verify_solution
from .unimodular import (
    AddMultiple,
    Negate,
    Swap,
    TransformPair,
    accumulate,
    apply_col_op,
    apply_row_op,
    is_unimodular,
    op_matrix,
    row_op_matrix,
)
