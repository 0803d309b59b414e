"""Immanants, their directional derivatives of all orders, and chi-symmetric tensor powers."""

__version__ = "0.1.0"

from .derivatives import (
    derivative,
    derivative_first,
    derivative_k_first_expression,
    derivative_k_second_expression,
    derivative_k_via_mixed,
    mixed_immanant,
    mixed_immanant_at,
)
from .errors import (
    DegenerateOrderWarning,
    MethodDisagreementError,
    ShapeError,
    SingularGramError,
    SizeLimitError,
    SymTensorError,
)
from .immanant import (
    brace,
    column_splice,
    deleted_submatrix,
    embedded_direct_sum,
    immanant,
    immanantal_adjoint,
    laplace_expansion,
    single_entry_matrix,
    submatrix,
)
from .indexcomb import Family, build_basis_index_set, complement, enumerate_index_maps, stabilizer
from .symgroup import (
    IrreducibleCharacter,
    Partition,
    character_table,
    character_value,
    conjugate_character,
    partitions,
)
from .tensorpower import gram_entry, gram_schmidt_B, imm_matrix, k_chi, k_chi_derivative, miximm_matrix
from ._scalars import as_matrix, exact_matrix, float_matrix

__all__ = [
    "as_matrix",
    "brace",
    "build_basis_index_set",
    "character_table",
    "character_value",
    "column_splice",
    "complement",
    "conjugate_character",
    "DegenerateOrderWarning",
    "deleted_submatrix",
    "derivative",
    "derivative_first",
    "derivative_k_first_expression",
    "derivative_k_second_expression",
    "derivative_k_via_mixed",
    "embedded_direct_sum",
    "enumerate_index_maps",
    "exact_matrix",
    "Family",
    "float_matrix",
    "gram_entry",
    "gram_schmidt_B",
    "imm_matrix",
    "immanant",
    "immanantal_adjoint",
    "IrreducibleCharacter",
    "k_chi",
    "k_chi_derivative",
    "laplace_expansion",
    "MethodDisagreementError",
    "mixed_immanant",
    "mixed_immanant_at",
    "miximm_matrix",
    "Partition",
    "partitions",
    "ShapeError",
    "single_entry_matrix",
    "SingularGramError",
    "SizeLimitError",
    "stabilizer",
    "submatrix",
    "SymTensorError",
]
