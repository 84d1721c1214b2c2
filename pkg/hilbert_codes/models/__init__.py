"""Hilbert code models package.

Pydantic models for the toolkit's domain entities:
- Matrix models (bit-packed generator matrices, weight enumerators)
- Place models (places of Q, square-class vectors, place sets)
- Block models (boxed matrices, free pairs, equivalence witnesses)
- Realization models (prime constraints, realizations, code metadata)
"""

from .blocks import (
    BLOCK_00,
    BLOCK_01,
    BLOCK_10,
    BLOCK_11,
    IDENTICAL_PAIRS,
    BlockMatrix,
    EquivalenceWitness,
    FreePairAssignment,
    format_block,
    parse_block,
)
from .matrices import BitMatrix, WeightEnumerator
from .places import Place, PlaceKind, PlaceSet, SquareClassVector
from .realization import CodeMetadata, PrimeConstraint, RealizationResult

__all__ = [
    # Matrix models
    "BitMatrix",
    "WeightEnumerator",
    # Place models
    "Place",
    "PlaceKind",
    "PlaceSet",
    "SquareClassVector",
    # Block models
    "BlockMatrix",
    "EquivalenceWitness",
    "FreePairAssignment",
    "BLOCK_00",
    "BLOCK_01",
    "BLOCK_10",
    "BLOCK_11",
    "IDENTICAL_PAIRS",
    "format_block",
    "parse_block",
    # Realization models
    "CodeMetadata",
    "PrimeConstraint",
    "RealizationResult",
]
