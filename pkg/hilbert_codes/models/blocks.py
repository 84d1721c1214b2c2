"""Block-matrix models: boxed matrices, free pairs and equivalence witnesses."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .matrices import BitMatrix

# A block is the pair of bits (left, right) packed as 2 * left + right
BLOCK_00 = 0b00
BLOCK_01 = 0b01
BLOCK_10 = 0b10
BLOCK_11 = 0b11
IDENTICAL_PAIRS = frozenset({BLOCK_00, BLOCK_11})


def format_block(block: int) -> str:
    return format(block, "02b")


def parse_block(text: str) -> int:
    if len(text) != 2 or set(text) - {"0", "1"}:
        raise ValueError(f"block {text!r} is not a pair of bits")
    return int(text, 2)


class BlockMatrix(BaseModel):
    """An n x n array of bit pairs viewing an n x 2n BitMatrix."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Block dimension")
    blocks: tuple[tuple[int, ...], ...] = Field(..., description="Row-major blocks")

    @model_validator(mode="after")
    def _check_blocks(self) -> BlockMatrix:
        if len(self.blocks) != self.n:
            raise ValueError(f"expected {self.n} block rows, got {len(self.blocks)}")
        for i, row in enumerate(self.blocks):
            if len(row) != self.n:
                raise ValueError(f"block row {i} has {len(row)} blocks, expected {self.n}")
            if any(not 0 <= b <= BLOCK_11 for b in row):
                raise ValueError(f"block row {i} holds a value outside 00..11")
        return self

    def block(self, i: int, j: int) -> int:
        """Block b_ij with 1-based indices as in the boxed properties."""
        return self.blocks[i - 1][j - 1]

    def to_strings(self) -> list[str]:
        return [" ".join(format_block(b) for b in row) for row in self.blocks]


class FreePairAssignment(BaseModel):
    """Identical pairs chosen for b_ij with 1 <= i < j <= n - 1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Block dimension")
    pairs: dict[tuple[int, int], int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_pairs(self) -> FreePairAssignment:
        expected = {(i, j) for i in range(1, self.n) for j in range(i + 1, self.n)}
        if set(self.pairs) != expected:
            raise ValueError(
                f"need exactly the {len(expected)} pairs (i, j) with "
                f"1 <= i < j <= {self.n - 1}"
            )
        if any(value not in IDENTICAL_PAIRS for value in self.pairs.values()):
            raise ValueError("free pairs must be 00 or 11")
        return self

    @classmethod
    def from_bits(cls, n: int, bits: int) -> FreePairAssignment:
        """Assignment whose k-th free pair (row-major order) is 11 iff bit k is set.

        The first free pair is the most significant bit, so counting ``bits``
        upwards walks assignments in lexicographic order.
        """
        keys = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
        width = len(keys)
        return cls(
            n=n,
            pairs={
                key: BLOCK_11 if (bits >> (width - 1 - k)) & 1 else BLOCK_00
                for k, key in enumerate(keys)
            },
        )


class EquivalenceWitness(BaseModel):
    """Row transform R and column permutation pi with boxed = R * (M permuted by pi)."""

    model_config = ConfigDict(frozen=True)

    row_transform: BitMatrix
    column_permutation: tuple[int, ...] = Field(
        ..., description="Column j of the result is column pi[j] of the input"
    )

    @model_validator(mode="after")
    def _check_witness(self) -> EquivalenceWitness:
        r = self.row_transform
        if r.n_rows != r.n_cols:
            raise ValueError("row transform must be square")
        if sorted(self.column_permutation) != list(range(len(self.column_permutation))):
            raise ValueError("column permutation is not a bijection")
        return self

    @property
    def is_identity(self) -> bool:
        return self.row_transform == BitMatrix.identity(
            self.row_transform.n_rows
        ) and all(j == c for j, c in enumerate(self.column_permutation))
