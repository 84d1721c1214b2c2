"""Hilbert code tools package.

One module per concern:
- gf2core: dense F2 linear algebra and weight enumeration
- localsym: Legendre and Hilbert symbols, square-class coordinates
- hilbert_code: generator matrices of Hilbert codes
- boxed: boxed block matrices and the boxing algorithm
- realize: prime realizations of boxed matrices
"""

from .boxed import (
    apply_witness,
    blocks_of,
    box_code,
    boxed_count,
    check_boxed_dimension,
    classify_boxed,
    complete_boxed,
    enumerate_boxed,
    free_pairs_of,
    identity_witness,
    is_boxed,
    is_half_boxed,
    matrix_of,
)
from .gf2core import (
    apply_column_permutation,
    is_doubly_even,
    is_self_dual_generator,
    min_distance,
    rank,
    row_space_equal,
    solve_left,
    weight_enumerator,
)
from .hilbert_code import (
    code_metadata,
    generator_matrix,
    identify_code,
    s_unit_generators,
    s_unit_vector,
    total_pairing,
    verify_place_set,
)
from .localsym import (
    admits_euclidean_basis,
    basis_representatives,
    gram_matrix,
    hilbert_symbol,
    legendre,
    square_class_coords,
    symbol_support,
)
from .realize import (
    next_prime_satisfying,
    realize,
    residue_constraints,
    verify_realization,
)

__all__ = [
    # gf2core
    "rank",
    "is_self_dual_generator",
    "is_doubly_even",
    "weight_enumerator",
    "min_distance",
    "solve_left",
    "row_space_equal",
    "apply_column_permutation",
    # localsym
    "legendre",
    "square_class_coords",
    "hilbert_symbol",
    "gram_matrix",
    "symbol_support",
    "admits_euclidean_basis",
    "basis_representatives",
    # hilbert_code
    "verify_place_set",
    "generator_matrix",
    "code_metadata",
    "s_unit_generators",
    "s_unit_vector",
    "total_pairing",
    "identify_code",
    # boxed
    "blocks_of",
    "matrix_of",
    "is_half_boxed",
    "is_boxed",
    "complete_boxed",
    "free_pairs_of",
    "enumerate_boxed",
    "classify_boxed",
    "boxed_count",
    "check_boxed_dimension",
    "box_code",
    "apply_witness",
    "identity_witness",
    # realize
    "residue_constraints",
    "next_prime_satisfying",
    "realize",
    "verify_realization",
]
