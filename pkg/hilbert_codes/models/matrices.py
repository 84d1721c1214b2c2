"""Matrix models over F2: generator matrices and weight enumerators."""

from __future__ import annotations

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core import InvalidInputError


class BitMatrix(BaseModel):
    """Dense matrix over F2 with bit-packed rows.

    Row ``i`` is an integer whose most significant of ``n_cols`` bits is
    column 0, so ``int("0110", 2)`` is the row ``0110``.
    """

    model_config = ConfigDict(frozen=True)

    n_rows: int = Field(..., ge=1, description="Number of rows")
    n_cols: int = Field(..., ge=1, description="Number of columns")
    rows: tuple[int, ...] = Field(..., description="Bit-packed rows")

    @model_validator(mode="after")
    def _check_shape(self) -> BitMatrix:
        if len(self.rows) != self.n_rows:
            raise ValueError(
                f"expected {self.n_rows} rows, got {len(self.rows)}"
            )
        bound = 1 << self.n_cols
        for index, row in enumerate(self.rows):
            if not 0 <= row < bound:
                raise ValueError(f"row {index} does not fit in {self.n_cols} columns")
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[int], n_cols: int) -> BitMatrix:
        packed = tuple(rows)
        return cls(n_rows=len(packed), n_cols=n_cols, rows=packed)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> BitMatrix:
        """Build from '0'/'1' strings of equal length."""
        text = [line.strip() for line in lines]
        if not text:
            raise InvalidInputError("a matrix needs at least one row")
        width = len(text[0])
        for index, line in enumerate(text):
            if len(line) != width:
                raise InvalidInputError(f"row {index} has length {len(line)}, expected {width}")
            if width == 0 or set(line) - {"0", "1"}:
                raise InvalidInputError(f"row {index} is not a string over {{0, 1}}")
        return cls.from_rows((int(line, 2) for line in text), width)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_rows((1 << (n - 1 - i) for i in range(n)), n)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls.from_rows((0 for _ in range(n_rows)), n_cols)

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.n_cols - 1 - j)) & 1

    def row_string(self, i: int) -> str:
        return format(self.rows[i], f"0{self.n_cols}b")

    def to_strings(self) -> list[str]:
        return [self.row_string(i) for i in range(self.n_rows)]

    def all_ones(self) -> int:
        return (1 << self.n_cols) - 1


class WeightEnumerator(BaseModel):
    """Tally of the codewords of a row space by Hamming weight."""

    model_config = ConfigDict(frozen=True)

    length: int = Field(..., ge=1, description="Code length")
    counts: dict[int, int] = Field(..., description="Weight -> number of codewords")

    @model_validator(mode="after")
    def _check_counts(self) -> WeightEnumerator:
        if self.counts.get(0) != 1:
            raise ValueError("exactly one codeword has weight 0")
        for weight, count in self.counts.items():
            if not 0 <= weight <= self.length or count <= 0:
                raise ValueError(f"invalid entry {weight}: {count}")
        total = self.total
        if total & (total - 1):
            raise ValueError(f"codeword total {total} is not a power of two")
        return self

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def dimension(self) -> int:
        return self.total.bit_length() - 1

    def as_pairs(self) -> list[list[int]]:
        return [[weight, self.counts[weight]] for weight in sorted(self.counts)]

    def is_symmetric(self) -> bool:
        return all(
            self.counts.get(self.length - weight) == count
            for weight, count in self.counts.items()
        )
