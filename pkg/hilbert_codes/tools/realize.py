"""Realize boxed matrices as Hilbert codes by searching for primes.

Row i of a boxed matrix fixes p_i modulo 8 through b_{i,n-1} and fixes the
quadratic character of p_i modulo each earlier p_j through b_ij. The upper
triangle and the row of 2 then follow from quadratic reciprocity.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..constants import PRIME_SEARCH
from ..core import DEFAULT_CONFIG, InvalidInputError, NotBoxedError, ToolkitConfig
from ..models import BLOCK_00, BlockMatrix, PlaceSet, PrimeConstraint, RealizationResult
from ..primes import is_odd_prime, is_prime
from .boxed import blocks_of, is_boxed
from .hilbert_code import generator_rows
from .localsym import legendre

logger = logging.getLogger(__name__)


def residue_constraints(blocks: BlockMatrix, index: int) -> PrimeConstraint:
    """Congruence and Legendre conditions on p_index read from a boxed matrix.

    Raises:
        NotBoxedError: ``blocks`` is not boxed.
        InvalidInputError: ``index`` is outside 1..n-2.
    """
    if not is_boxed(blocks):
        raise NotBoxedError("constraints can only be read from a boxed matrix")
    n = blocks.n
    if not 1 <= index <= n - 2:
        raise InvalidInputError(f"prime index must lie in 1..{n - 2}, got {index}")
    return PrimeConstraint(
        index=index,
        mod8_class=3 if blocks.block(index, n - 1) == BLOCK_00 else 7,
        legendre_conditions=tuple(
            (j, 1 if blocks.block(index, j) == BLOCK_00 else -1)
            for j in range(1, index)
        ),
    )


def next_prime_satisfying(
    constraint: PrimeConstraint,
    chosen: Sequence[int],
    start: int,
    bound: int,
) -> int | None:
    """Smallest prime q in [start, bound] meeting ``constraint``, or None.

    ``chosen[j - 1]`` is the prime already picked for index j.
    """
    if start < 3:
        raise InvalidInputError(f"search must start at 3 or above, got {start}")
    if bound > PRIME_SEARCH["max_bound"]:
        raise InvalidInputError(f"bound {bound} exceeds 2**63")
    taken = set(chosen)
    residue = constraint.mod8_class
    q = start + (residue - start) % 8
    while q <= bound:
        if q not in taken and is_prime(q):
            if all(
                legendre(q, chosen[j - 1]) == sign
                for j, sign in constraint.legendre_conditions
            ):
                return q
        q += 8
    return None


def realize(
    blocks: BlockMatrix,
    count: int = 1,
    bound: int | None = None,
    config: ToolkitConfig = DEFAULT_CONFIG,
) -> RealizationResult:
    """First ``count`` place sets, in lexicographic order of (p_1, ..., p_{n-2}),
    whose Hilbert code has block view ``blocks``.

    Primes are chosen ascending so each tuple is already the sorted PlaceSet.

    Raises:
        NotBoxedError: ``blocks`` is not boxed.
        InvalidInputError: ``count`` or ``bound`` is out of range.
    """
    if not is_boxed(blocks):
        raise NotBoxedError("only boxed matrices can be realized")
    if count < 1:
        raise InvalidInputError(f"count must be at least 1, got {count}")
    limit = config.default_prime_bound if bound is None else bound
    if not 3 <= limit <= PRIME_SEARCH["max_bound"]:
        raise InvalidInputError(f"bound must lie in [3, 2**63], got {limit}")

    depth = blocks.n - 2
    constraints = [residue_constraints(blocks, i) for i in range(1, depth + 1)]
    found: list[PlaceSet] = []
    chosen: list[int] = []
    deepest = 0

    def search(level: int) -> None:
        nonlocal deepest
        start = chosen[-1] + 1 if chosen else 3
        while len(found) < count:
            q = next_prime_satisfying(constraints[level], chosen, start, limit)
            if q is None:
                return
            chosen.append(q)
            deepest = max(deepest, level + 1)
            if level + 1 == depth:
                found.append(PlaceSet(primes=tuple(chosen)))
                logger.debug(f"Realization {len(found)}: {chosen}")
            else:
                search(level + 1)
            chosen.pop()
            start = q + 1

    if depth == 0:
        found.append(PlaceSet())
    else:
        search(0)

    exhausted = len(found) < count
    if exhausted and depth == 0:
        logger.warning(
            "S = {inf, 2} is the only realization of a 2 x 2 boxed matrix; "
            f"returning 1 of {count}"
        )
    elif exhausted:
        logger.warning(
            f"Bound {limit} exhausted after {len(found)} of {count} realizations "
            f"(deepest prime index {deepest} of {depth})"
        )
    return RealizationResult(
        boxed=blocks,
        realizations=found,
        requested=count,
        bound=limit,
        exhausted=exhausted,
        deepest_index=deepest,
    )


def verify_realization(blocks: BlockMatrix, places: PlaceSet | Sequence[int]) -> bool:
    """True iff the Hilbert code of the primes, in the listed order, has block view ``blocks``.

    A PlaceSet is always in ascending order; a plain sequence is rebuilt
    exactly as listed.
    """
    primes = places.primes if isinstance(places, PlaceSet) else tuple(places)
    if len(primes) != blocks.n - 2 or len(set(primes)) != len(primes):
        return False
    if any(not is_odd_prime(p) or p % 4 != 3 for p in primes):
        return False
    return blocks_of(generator_rows(primes)) == blocks
