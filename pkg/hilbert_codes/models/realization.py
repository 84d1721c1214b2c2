"""Models for code metadata and prime realizations of boxed matrices."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .blocks import BlockMatrix
from .matrices import BitMatrix, WeightEnumerator
from .places import PlaceSet


class PrimeConstraint(BaseModel):
    """Conditions a prime p_i must meet to realize row i of a boxed matrix."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1, description="Row index i (1-based)")
    mod8_class: Literal[3, 7] = Field(..., description="Required residue mod 8")
    legendre_conditions: tuple[tuple[int, int], ...] = Field(
        default=(),
        description="(j, sign): legendre(p_i, p_j) must equal sign, for j < i",
    )

    @field_validator("legendre_conditions")
    @classmethod
    def _check_conditions(
        cls, conditions: tuple[tuple[int, int], ...]
    ) -> tuple[tuple[int, int], ...]:
        for j, sign in conditions:
            if sign not in (-1, 1):
                raise ValueError(f"sign for p_{j} must be +1 or -1, got {sign}")
        return conditions


class RealizationResult(BaseModel):
    """Place sets realizing a boxed matrix, with exhaustion reporting."""

    boxed: BlockMatrix
    realizations: list[PlaceSet] = Field(default_factory=list)
    requested: int = Field(..., ge=1)
    bound: int = Field(..., ge=3)
    exhausted: bool = Field(
        False,
        description=(
            "True when fewer than `requested` sets were found: the bound ran out, "
            "or n = 2 and S = {inf, 2} is the only one"
        ),
    )
    deepest_index: int = Field(
        0, description="Largest prime index assigned during the search"
    )


class CodeMetadata(BaseModel):
    """Generator matrix of a Hilbert code bundled with its statistics."""

    places: PlaceSet
    generator: BitMatrix
    boxed_blocks: BlockMatrix
    weight_enumerator: WeightEnumerator | None = Field(
        None, description="Absent when the rank exceeds the brute-force guard"
    )
    min_distance: int | None = None
    doubly_even: bool
    identified_as: str | None = Field(
        None, description="Name of a known code with the same weight profile"
    )
