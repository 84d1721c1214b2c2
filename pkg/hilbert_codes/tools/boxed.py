"""Boxed block matrices: predicates, completion, enumeration and boxing.

Block indices in the public predicates follow the boxed properties and are
1-based; the boxing kernel works 0-based on packed rows.

Properties of an n x n block matrix b_ij:
  (1) the bottom row is all 11;
  (2) the last column is 10 except for the final 11;
  (3) the diagonal is 01 except for the final 11;
  (4) every other block is an identical pair (00 or 11);
  (5) b_ij + b_ji = 11 for n - 1 >= i > j >= 1.
(1)-(4) is half-boxed, (1)-(5) is boxed.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from typing import Any

from ..constants import ENUMERATION_LIMITS
from ..core import (
    DEFAULT_CONFIG,
    BoxingError,
    GuardExceededError,
    InvalidInputError,
    NotBoxedError,
    NotSelfDualError,
    ToolkitConfig,
)
from ..models import (
    BLOCK_00,
    BLOCK_01,
    BLOCK_10,
    BLOCK_11,
    IDENTICAL_PAIRS,
    BitMatrix,
    BlockMatrix,
    EquivalenceWitness,
    FreePairAssignment,
)
from . import gf2core

logger = logging.getLogger(__name__)

_MIXED_PAIRS = (BLOCK_01, BLOCK_10)


def blocks_of(matrix: BitMatrix) -> BlockMatrix:
    """View an n x 2n matrix as n x n blocks, pairing columns left to right.

    Raises:
        InvalidInputError: the shape is not n x 2n.
    """
    if matrix.n_cols % 2 or matrix.n_rows != matrix.n_cols // 2:
        raise InvalidInputError(
            f"a block view needs an n x 2n matrix, got {matrix.n_rows}x{matrix.n_cols}"
        )
    n = matrix.n_rows
    return BlockMatrix(
        n=n,
        blocks=tuple(
            tuple((row >> (2 * (n - 1 - j))) & BLOCK_11 for j in range(n))
            for row in matrix.rows
        ),
    )


def matrix_of(blocks: BlockMatrix) -> BitMatrix:
    """Flatten a block matrix back into its n x 2n BitMatrix."""
    rows = []
    for block_row in blocks.blocks:
        row = 0
        for block in block_row:
            row = (row << 2) | block
        rows.append(row)
    return BitMatrix.from_rows(rows, 2 * blocks.n)


def is_half_boxed(blocks: BlockMatrix) -> bool:
    n = blocks.n
    if n < 2:
        return False
    b = blocks.block
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == n:
                expected: frozenset[int] = frozenset({BLOCK_11})
            elif j == n:
                expected = frozenset({BLOCK_10})
            elif i == j:
                expected = frozenset({BLOCK_01})
            else:
                expected = IDENTICAL_PAIRS
            if b(i, j) not in expected:
                return False
    return True


def is_boxed(blocks: BlockMatrix) -> bool:
    if not is_half_boxed(blocks):
        return False
    b = blocks.block
    return all(
        b(i, j) ^ b(j, i) == BLOCK_11
        for i in range(2, blocks.n)
        for j in range(1, i)
    )


def complete_boxed(free: FreePairAssignment) -> BlockMatrix:
    """The unique boxed matrix whose upper free region is ``free``."""
    n = free.n
    grid = [[BLOCK_00] * n for _ in range(n)]
    for i in range(n - 1):
        grid[i][i] = BLOCK_01
        grid[i][n - 1] = BLOCK_10
    grid[n - 1] = [BLOCK_11] * n
    for (i, j), value in free.pairs.items():
        grid[i - 1][j - 1] = value
        grid[j - 1][i - 1] = value ^ BLOCK_11
    return BlockMatrix(n=n, blocks=tuple(tuple(row) for row in grid))


def free_pairs_of(blocks: BlockMatrix) -> FreePairAssignment:
    """Read back the free pairs b_ij, 1 <= i < j <= n - 1, of a boxed matrix.

    Raises:
        NotBoxedError: ``blocks`` is not boxed.
    """
    if not is_boxed(blocks):
        raise NotBoxedError("free pairs are only defined for boxed matrices")
    n = blocks.n
    return FreePairAssignment(
        n=n,
        pairs={
            (i, j): blocks.block(i, j) for i in range(1, n) for j in range(i + 1, n)
        },
    )


def free_pair_count(n: int) -> int:
    return (n - 1) * (n - 2) // 2


def boxed_count(n: int) -> int:
    """Number of boxed n x n matrices."""
    return 1 << free_pair_count(n)


def check_boxed_dimension(n: int, config: ToolkitConfig = DEFAULT_CONFIG) -> None:
    """Refuse block dimensions outside the enumeration range.

    Raises:
        GuardExceededError: n is outside the supported range.
    """
    if not ENUMERATION_LIMITS["min_boxed_dimension"] <= n <= config.max_boxed_dimension:
        raise GuardExceededError(
            f"enumeration supports 2 <= n <= {config.max_boxed_dimension}, got {n}"
        )


def enumerate_boxed(
    n: int, config: ToolkitConfig = DEFAULT_CONFIG
) -> Iterator[BlockMatrix]:
    """Every boxed n x n matrix, in lexicographic order of the free-pair bits.

    n is checked on the call, before the first matrix is requested.

    Raises:
        GuardExceededError: n is outside the supported range.
    """
    check_boxed_dimension(n, config)
    logger.info(f"Enumerating {boxed_count(n)} boxed matrices of dimension {n}")
    return _completions(n)


def _completions(n: int) -> Iterator[BlockMatrix]:
    for bits in range(boxed_count(n)):
        yield complete_boxed(FreePairAssignment.from_bits(n, bits))


def classify_boxed(
    n: int, config: ToolkitConfig = DEFAULT_CONFIG
) -> list[dict[str, Any]]:
    """Group the boxed matrices of dimension n by weight enumerator.

    Classes are ordered by their first member; members are indices into
    ``enumerate_boxed(n)``.
    """
    classes: dict[tuple[tuple[int, int], ...], dict[str, Any]] = {}
    for index, blocks in enumerate(enumerate_boxed(n, config)):
        enumerator = gf2core.weight_enumerator(matrix_of(blocks))
        key = tuple(sorted(enumerator.counts.items()))
        entry = classes.setdefault(
            key, {"weight_enumerator": enumerator, "size": 0, "members": []}
        )
        entry["size"] += 1
        entry["members"].append(index)
    return list(classes.values())


def identity_witness(n: int) -> EquivalenceWitness:
    return EquivalenceWitness(
        row_transform=BitMatrix.identity(n),
        column_permutation=tuple(range(2 * n)),
    )


def apply_witness(witness: EquivalenceWitness, matrix: BitMatrix) -> BitMatrix:
    """R * (M with columns permuted by pi).

    Raises:
        InvalidInputError: the dimensions disagree or R is singular.
    """
    transform = witness.row_transform
    if transform.n_rows != matrix.n_rows:
        raise InvalidInputError(
            f"row transform is {transform.n_rows}x{transform.n_cols}, "
            f"matrix has {matrix.n_rows} rows"
        )
    if len(witness.column_permutation) != matrix.n_cols:
        raise InvalidInputError(
            f"permutation has {len(witness.column_permutation)} entries, "
            f"matrix has {matrix.n_cols} columns"
        )
    if gf2core.rank(transform) != transform.n_rows:
        raise InvalidInputError("row transform is not invertible")
    permuted = gf2core.apply_column_permutation(matrix, witness.column_permutation)
    return gf2core.multiply(transform, permuted)


class _BoxingState:
    """Working copy of a generator with its accumulated witness.

    Invariant: ``rows == R * (M permuted by perm)`` where row i of R is
    ``transform[i]``.
    """

    def __init__(self, matrix: BitMatrix) -> None:
        self.n = matrix.n_rows
        self.width = matrix.n_cols
        self.rows = list(matrix.rows)
        self.transform = [1 << (self.n - 1 - i) for i in range(self.n)]
        self.perm = list(range(self.width))

    def bit(self, i: int, col: int) -> int:
        return (self.rows[i] >> (self.width - 1 - col)) & 1

    def block(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.width - 2 - 2 * j)) & BLOCK_11

    def add_row(self, dst: int, src: int) -> None:
        self.rows[dst] ^= self.rows[src]
        self.transform[dst] ^= self.transform[src]

    def swap_rows(self, a: int, b: int) -> None:
        if a == b:
            return
        self.rows[a], self.rows[b] = self.rows[b], self.rows[a]
        self.transform[a], self.transform[b] = self.transform[b], self.transform[a]

    def swap_cols(self, a: int, b: int) -> None:
        if a == b:
            return
        mask = (1 << (self.width - 1 - a)) | (1 << (self.width - 1 - b))
        for i, row in enumerate(self.rows):
            if self.bit(i, a) != self.bit(i, b):
                self.rows[i] = row ^ mask
        self.perm[a], self.perm[b] = self.perm[b], self.perm[a]

    def place_bits(self, i: int, start: int, pattern: Sequence[int]) -> None:
        """Permute columns at or after ``start`` so row i reads ``pattern`` there.

        Each mismatch is fixed by swapping with the lowest-indexed later
        column carrying the wanted bit.
        """
        for offset, want in enumerate(pattern):
            pos = start + offset
            if self.bit(i, pos) == want:
                continue
            source = next(
                (c for c in range(pos + 1, self.width) if self.bit(i, c) == want),
                None,
            )
            if source is None:
                raise BoxingError(f"row {i} has no column to move into position {pos}")
            self.swap_cols(pos, source)

    def witness(self) -> EquivalenceWitness:
        return EquivalenceWitness(
            row_transform=BitMatrix.from_rows(self.transform, self.n),
            column_permutation=tuple(self.perm),
        )

    def matrix(self) -> BitMatrix:
        return BitMatrix.from_rows(self.rows, self.width)


def box_code(matrix: BitMatrix) -> tuple[BlockMatrix, EquivalenceWitness]:
    """Carry a self-dual generator matrix to boxed form.

    Returns the boxed matrix B and a witness (R, pi) with
    ``matrix_of(B) == R * (matrix permuted by pi)``. The all-ones row is
    moved to the bottom first and no other row is ever added to it.

    Raises:
        NotSelfDualError: ``matrix`` does not generate a self-dual code.
        InvalidInputError: ``matrix`` has fewer than two rows.
    """
    if matrix.n_cols % 2 or matrix.n_rows != matrix.n_cols // 2:
        raise NotSelfDualError(
            f"expected an n x 2n generator, got {matrix.n_rows}x{matrix.n_cols}"
        )
    if matrix.n_rows < 2:
        raise InvalidInputError(f"boxed form needs n >= 2, got n = {matrix.n_rows}")
    if not gf2core.is_self_dual_generator(matrix):
        raise NotSelfDualError("the rows do not span a self-dual code")
    n = matrix.n_rows
    current = blocks_of(matrix)
    if is_boxed(current):
        logger.debug("Input already boxed; returning the identity witness")
        return current, identity_witness(n)

    state = _BoxingState(matrix)
    last = n - 1

    # Make the last row the all-ones word m_1
    coefficients = gf2core.solve_left(matrix, matrix.all_ones())
    if coefficients is None:
        raise BoxingError("a self-dual code must contain the all-ones word")
    pivot = max(i for i, c in enumerate(coefficients) if c)
    for i, c in enumerate(coefficients):
        if c and i != pivot:
            state.add_row(pivot, i)
    state.swap_rows(pivot, last)

    # Shrink the active window: pivot 01 on the diagonal, identical pairs below
    for k in range(n - 2):
        state.place_bits(k, 2 * k, (0, 1))
        for j in range(k + 1, last):
            if state.block(j, k) in _MIXED_PAIRS:
                state.add_row(j, k)
        logger.debug(f"Boxing step {k}: pivot placed, column cleared")

    # The remaining row has weight 2 inside the last two blocks
    state.place_bits(n - 2, 2 * (n - 2), (0, 1, 1, 0))

    # Clear each row's tail back up the window
    for k in range(n - 3, -1, -1):
        for j in range(k + 1, last):
            if state.block(k, j) in _MIXED_PAIRS:
                state.add_row(k, j)
        if state.block(k, last) == BLOCK_01:
            state.add_row(k, last)
        if state.block(k, k) == BLOCK_10:
            state.swap_cols(2 * k, 2 * k + 1)

    boxed = blocks_of(state.matrix())
    if not is_boxed(boxed):
        raise BoxingError("boxing finished without reaching boxed form")
    logger.info(f"Boxed a self-dual code of length {matrix.n_cols}")
    return boxed, state.witness()
