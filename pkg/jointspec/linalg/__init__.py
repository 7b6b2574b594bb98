"""Exact and floating-point linear algebra kernel."""

from .exact import (
    RationalMatrix,
    exact_determinant,
    exact_inverse,
    exact_charpoly,
    leibniz_determinant,
    permutation_sign,
    bareiss_determinant,
    as_fraction_array,
)
from .matrix import (
    SymmetricMatrix,
    matrix_power,
    power_table,
    column_mix,
    submatrix,
    complement,
    validate_subset,
    as_values,
    to_exact,
    exact_identity,
)
from .eigen import EigenSystem, eigendecompose, group_classes
from .schur import schur_block, resolvent, resolvent_block

__all__ = [
    "RationalMatrix",
    "exact_determinant",
    "exact_inverse",
    "exact_charpoly",
    "leibniz_determinant",
    "permutation_sign",
    "bareiss_determinant",
    "as_fraction_array",
    "SymmetricMatrix",
    "matrix_power",
    "power_table",
    "column_mix",
    "submatrix",
    "complement",
    "validate_subset",
    "as_values",
    "to_exact",
    "exact_identity",
    "EigenSystem",
    "eigendecompose",
    "group_classes",
    "schur_block",
    "resolvent",
    "resolvent_block",
]
