"""Dense linear algebra over F2 on bit-packed rows."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence

import numpy as np

from ..constants import GF2_LIMITS
from ..core import DEFAULT_CONFIG, GuardExceededError, InvalidInputError
from ..models import BitMatrix, WeightEnumerator

logger = logging.getLogger(__name__)


def inner(u: int, v: int) -> int:
    """Standard F2 inner product of two packed rows."""
    return (u & v).bit_count() & 1


def echelon(rows: Sequence[int], n_cols: int) -> list[tuple[int, int, int]]:
    """Reduced row echelon basis with leftmost-pivot selection.

    Returns ``(row, pivot_bit, combination)`` triples where ``combination``
    records which input rows (bit ``i`` for row ``i``) sum to ``row``.
    """
    work = [(row, 1 << i) for i, row in enumerate(rows)]
    basis: list[tuple[int, int, int]] = []
    for col in range(n_cols - 1, -1, -1):
        bit = 1 << col
        pivot = next((k for k, (row, _) in enumerate(work) if row & bit), None)
        if pivot is None:
            continue
        prow, pcombo = work.pop(pivot)
        work = [
            (row ^ prow, combo ^ pcombo) if row & bit else (row, combo)
            for row, combo in work
        ]
        basis = [
            (row ^ prow, pb, combo ^ pcombo) if row & bit else (row, pb, combo)
            for row, pb, combo in basis
        ]
        basis.append((prow, bit, pcombo))
    return basis


def rank(matrix: BitMatrix) -> int:
    """Row rank over F2."""
    return len(echelon(matrix.rows, matrix.n_cols))


def is_self_dual_generator(matrix: BitMatrix) -> bool:
    """True iff M * M^T = 0 and rank(M) = cols / 2.

    Raises:
        InvalidInputError: the column count is odd.
    """
    if matrix.n_cols % 2:
        raise InvalidInputError(
            f"self-duality needs an even length, got {matrix.n_cols} columns"
        )
    rows = matrix.rows
    for i, u in enumerate(rows):
        for v in rows[i:]:
            if inner(u, v):
                return False
    return rank(matrix) == matrix.n_cols // 2


def is_doubly_even(matrix: BitMatrix) -> bool:
    """True iff every codeword weight is divisible by 4.

    A self-orthogonal span of rows with weights 0 mod 4 is doubly even, so
    checking the generators suffices.
    """
    rows = matrix.rows
    if any(row.bit_count() % 4 for row in rows):
        return False
    return all(inner(u, v) == 0 for i, u in enumerate(rows) for v in rows[i + 1 :])


def _gray_offsets(basis: Sequence[int]) -> Iterator[int]:
    """Every XOR combination of ``basis``, one flip per step."""
    value = 0
    yield value
    for step in range(1, 1 << len(basis)):
        value ^= basis[(step & -step).bit_length() - 1]
        yield value


def _count_packed(basis: list[int], n_cols: int) -> list[int]:
    split = min(len(basis), GF2_LIMITS["partition_bits"])
    low, high = basis[:split], basis[split:]
    words = np.zeros(1, dtype=np.uint64)
    for row in low:
        words = np.concatenate([words, words ^ np.uint64(row)])
    counts = np.zeros(n_cols + 1, dtype=np.int64)
    for offset in _gray_offsets(high):
        shifted = words ^ np.uint64(offset)
        counts += np.bincount(np.bitwise_count(shifted), minlength=n_cols + 1)
    return [int(c) for c in counts]


def _count_wide(basis: list[int], n_cols: int) -> list[int]:
    counts = [0] * (n_cols + 1)
    for word in _gray_offsets(basis):
        counts[word.bit_count()] += 1
    return counts


def weight_enumerator(
    matrix: BitMatrix, guard: int = DEFAULT_CONFIG.enumerator_rank_guard
) -> WeightEnumerator:
    """Exact weight distribution of the row space by brute force.

    Raises:
        GuardExceededError: the rank is above ``guard``.
    """
    basis = [row for row, _, _ in echelon(matrix.rows, matrix.n_cols)]
    if len(basis) > guard:
        raise GuardExceededError(
            f"rank {len(basis)} exceeds the brute-force guard of {guard}"
        )
    if matrix.n_cols <= GF2_LIMITS["packed_word_bits"]:
        counts = _count_packed(basis, matrix.n_cols)
    else:
        counts = _count_wide(basis, matrix.n_cols)
    logger.debug(f"Enumerated {1 << len(basis)} codewords of length {matrix.n_cols}")
    return WeightEnumerator(
        length=matrix.n_cols,
        counts={weight: count for weight, count in enumerate(counts) if count},
    )


def min_distance(
    matrix: BitMatrix, guard: int = DEFAULT_CONFIG.enumerator_rank_guard
) -> int:
    """Minimum weight of a nonzero codeword.

    Raises:
        InvalidInputError: the row space is zero.
        GuardExceededError: the rank is above ``guard``.
    """
    enumerator = weight_enumerator(matrix, guard)
    nonzero = [weight for weight in enumerator.counts if weight > 0]
    if not nonzero:
        raise InvalidInputError("the row space is zero; no minimum distance")
    return min(nonzero)


def solve_left(matrix: BitMatrix, target: int) -> tuple[int, ...] | None:
    """Coefficients x with x * M = target, or None if target is outside the row space."""
    if not 0 <= target < (1 << matrix.n_cols):
        raise InvalidInputError(f"target does not fit in {matrix.n_cols} columns")
    residual, combo = target, 0
    for row, pivot, row_combo in echelon(matrix.rows, matrix.n_cols):
        if residual & pivot:
            residual ^= row
            combo ^= row_combo
    if residual:
        return None
    return tuple((combo >> i) & 1 for i in range(matrix.n_rows))


def row_space_equal(a: BitMatrix, b: BitMatrix) -> bool:
    """True iff A and B span the same subspace.

    Raises:
        InvalidInputError: the column counts differ.
    """
    if a.n_cols != b.n_cols:
        raise InvalidInputError(f"column mismatch: {a.n_cols} vs {b.n_cols}")
    rank_a = len(echelon(a.rows, a.n_cols))
    rank_b = len(echelon(b.rows, b.n_cols))
    joint = len(echelon(a.rows + b.rows, a.n_cols))
    return rank_a == rank_b == joint


def check_permutation(permutation: Sequence[int], size: int) -> None:
    if len(permutation) != size or sorted(permutation) != list(range(size)):
        raise InvalidInputError(f"not a permutation of {size} columns: {list(permutation)}")


def apply_column_permutation(matrix: BitMatrix, permutation: Sequence[int]) -> BitMatrix:
    """Column j of the result is column permutation[j] of the input.

    Raises:
        InvalidInputError: ``permutation`` is not a bijection on the columns.
    """
    n_cols = matrix.n_cols
    check_permutation(permutation, n_cols)
    shifts = [n_cols - 1 - source for source in permutation]
    permuted = []
    for row in matrix.rows:
        out = 0
        for shift in shifts:
            out = (out << 1) | ((row >> shift) & 1)
        permuted.append(out)
    return BitMatrix.from_rows(permuted, n_cols)


def multiply(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """Matrix product over F2.

    Raises:
        InvalidInputError: inner dimensions disagree.
    """
    if left.n_cols != right.n_rows:
        raise InvalidInputError(
            f"cannot multiply {left.n_rows}x{left.n_cols} by "
            f"{right.n_rows}x{right.n_cols}"
        )
    product = []
    for i in range(left.n_rows):
        out = 0
        for j in range(left.n_cols):
            if left.bit(i, j):
                out ^= right.rows[j]
        product.append(out)
    return BitMatrix.from_rows(product, right.n_cols)


def transpose(matrix: BitMatrix) -> BitMatrix:
    return BitMatrix.from_rows(
        (
            sum(matrix.bit(i, j) << (matrix.n_rows - 1 - i) for i in range(matrix.n_rows))
            for j in range(matrix.n_cols)
        ),
        matrix.n_rows,
    )
