"""Generator matrices of the Hilbert self-dual codes attached to place sets.

Rows are the S-units p_1, ..., p_{n-2}, 2, -1; columns are the square-class
coordinates at W_{p_1}, ..., W_{p_{n-2}} (basis {-p, p}), W_2 (basis
{-2, -10, -5}) and W_inf (basis {-1}). With this ordering the block view of
the generator is boxed without any permutation.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from ..constants import KNOWN_CODES
from ..core import DEFAULT_CONFIG, InvalidInputError, PlaceSetError, ToolkitConfig
from ..models import BitMatrix, CodeMetadata, Place, PlaceSet, WeightEnumerator
from ..primes import factor_small, is_prime
from . import gf2core
from .boxed import blocks_of
from .localsym import hilbert_symbol, square_class_coords

logger = logging.getLogger(__name__)


def verify_place_set(candidates: Iterable[int]) -> PlaceSet:
    """Validate candidate odd primes and return the canonical (sorted) PlaceSet.

    Raises:
        PlaceSetError: naming the first offending entry and the violated condition.
    """
    seen: set[int] = set()
    for p in candidates:
        if p == 2:
            raise PlaceSetError(p, "is implicit in every place set and must not be listed")
        if p < 2:
            raise PlaceSetError(p, "is not a prime")
        if not is_prime(p):
            raise PlaceSetError(p, "composite")
        if p % 4 == 1:
            raise PlaceSetError(p, "≡ 1 mod 4")
        if p in seen:
            raise PlaceSetError(p, "listed twice")
        seen.add(p)
    return PlaceSet(primes=tuple(seen))


def s_unit_generators(places: PlaceSet) -> list[int]:
    """Generators of the S-unit group in row order: the odd primes, 2, -1."""
    return [*places.primes, 2, -1]


def _column_places(primes: Sequence[int]) -> list[Place]:
    return [Place.odd(p) for p in primes] + [Place.two(), Place.infinity()]


def _unit_row(unit: int, columns: Sequence[Place]) -> int:
    row = 0
    for place in columns:
        for bit in square_class_coords(unit, place).coords:
            row = (row << 1) | bit
    return row


def generator_rows(primes: Sequence[int]) -> BitMatrix:
    """Hilbert generator with rows and W_p columns in the given prime order.

    ``generator_matrix`` passes the canonical ascending order; other orders
    let a realization be checked exactly as it was listed.
    """
    columns = _column_places(primes)
    units = [*primes, 2, -1]
    return BitMatrix.from_rows((_unit_row(u, columns) for u in units), 2 * len(units))


def generator_matrix(places: PlaceSet) -> BitMatrix:
    """The n x 2n generator matrix of the Hilbert code of S."""
    matrix = generator_rows(places.primes)
    logger.debug(f"Built {matrix.n_rows}x{matrix.n_cols} generator for {places.primes}")
    return matrix


def s_unit_vector(unit: int, places: PlaceSet) -> int:
    """Diagonal image of an S-unit in W as a packed row of length 2n.

    Raises:
        InvalidInputError: ``unit`` has a prime factor outside S.
    """
    if unit == 0:
        raise InvalidInputError("0 is not an S-unit")
    allowed = {2, *places.primes}
    outside = sorted(set(factor_small(unit)) - allowed)
    if outside:
        raise InvalidInputError(f"{unit} is not an S-unit: prime factors {outside} lie outside S")
    return _unit_row(unit, places.places())


def total_pairing(a: int, b: int, places: PlaceSet) -> int:
    """Sum over v in S of the Hilbert symbols (a, b)_v."""
    value = 0
    for place in places.places():
        value ^= hilbert_symbol(a, b, place)
    return value


def identify_code(
    matrix: BitMatrix, enumerator: WeightEnumerator | None = None
) -> str | None:
    """Name of the reference code (e8, g24) whose weight profile M reproduces."""
    candidates = [
        name for name, spec in KNOWN_CODES.items() if spec["length"] == matrix.n_cols
    ]
    if not candidates or not gf2core.is_self_dual_generator(matrix):
        return None
    if enumerator is None:
        enumerator = gf2core.weight_enumerator(matrix)
    for name in candidates:
        if enumerator.counts == KNOWN_CODES[name]["weight_enumerator"]:
            return name
    return None


def code_metadata(
    places: PlaceSet, config: ToolkitConfig = DEFAULT_CONFIG
) -> CodeMetadata:
    """Generator, block view and brute-force statistics of the Hilbert code of S.

    The enumerator fields stay empty when n exceeds the brute-force guard.
    """
    generator = generator_matrix(places)
    enumerator: WeightEnumerator | None = None
    distance: int | None = None
    identified: str | None = None
    if places.n <= config.enumerator_rank_guard:
        enumerator = gf2core.weight_enumerator(generator, config.enumerator_rank_guard)
        distance = min(weight for weight in enumerator.counts if weight > 0)
        identified = identify_code(generator, enumerator)
    else:
        logger.info(f"Skipping enumeration: n = {places.n} is above the guard")
    return CodeMetadata(
        places=places,
        generator=generator,
        boxed_blocks=blocks_of(generator),
        weight_enumerator=enumerator,
        min_distance=distance,
        doubly_even=gf2core.is_doubly_even(generator),
        identified_as=identified,
    )
