"""Legendre symbols, Hilbert symbols and square classes at the places of Q.

Symbols are evaluated from the closed-form local formulas: only the
valuation, the unit part modulo p (or modulo 8) and the sign of each argument
are needed, so no global factorization happens outside ``symbol_support``.
Bits encode symbol values additively: 0 is +1 and 1 is -1.
"""

from __future__ import annotations

import logging

from ..constants import (
    PLACE_BASES,
    PRIME_SEARCH,
    TWO_ADIC_UNIFORMIZER_COORDS,
    TWO_ADIC_UNIT_COORDS,
)
from ..core import InvalidInputError
from ..models import BitMatrix, Place, PlaceKind, SquareClassVector
from ..primes import factor_small, is_odd_prime

logger = logging.getLogger(__name__)

_MAGNITUDE = 1 << PRIME_SEARCH["integer_bits"]


def _check_integer(r: int, name: str = "argument") -> None:
    if r == 0:
        raise InvalidInputError(f"{name} must be nonzero")
    if abs(r) >= _MAGNITUDE:
        raise InvalidInputError(f"{name} {r} exceeds 63-bit magnitude")


def valuation(r: int, p: int) -> tuple[int, int]:
    """Split r = p**alpha * u with p not dividing u; returns (alpha, u)."""
    if r == 0:
        raise InvalidInputError("the valuation of 0 is undefined")
    alpha = 0
    while r % p == 0:
        r //= p
        alpha += 1
    return alpha, r


def legendre(a: int, p: int) -> int:
    """Quadratic character of a modulo the odd prime p, or 0 when p divides a.

    Raises:
        InvalidInputError: p is not an odd prime.
    """
    if not is_odd_prime(p):
        raise InvalidInputError(f"{p} is not an odd prime")
    residue = pow(a % p, (p - 1) // 2, p)
    if residue == 0:
        return 0
    return 1 if residue == 1 else -1


def _eps(u: int) -> int:
    """(u - 1) / 2 mod 2 for odd u."""
    return ((u - 1) // 2) & 1


def _omega(u: int) -> int:
    """(u**2 - 1) / 8 mod 2 for odd u."""
    return ((u * u - 1) // 8) & 1


def admits_euclidean_basis(place: Place) -> bool:
    """True iff -1 is not a square in Q_v, which is when a Euclidean basis exists."""
    if place.kind is PlaceKind.ODD:
        return (place.prime or 0) % 4 == 3
    return True


def basis_representatives(place: Place) -> tuple[int, ...]:
    """Integers representing the ordered basis of Q_v*/(Q_v*)^2."""
    if place.kind is PlaceKind.ODD:
        p = place.prime or 0
        return (-p, p)
    return PLACE_BASES[place.kind.value]


def square_class_coords(r: int, place: Place) -> SquareClassVector:
    """Coordinates of r in Q_v*/(Q_v*)^2 relative to the basis of ``place``.

    Raises:
        InvalidInputError: r is zero or too large.
    """
    _check_integer(r)
    if place.kind is PlaceKind.INFINITY:
        coords: tuple[int, ...] = (1 if r < 0 else 0,)
    elif place.kind is PlaceKind.TWO:
        alpha, u = valuation(r, 2)
        unit = TWO_ADIC_UNIT_COORDS[u % 8]
        if alpha & 1:
            unit = tuple(a ^ b for a, b in zip(unit, TWO_ADIC_UNIFORMIZER_COORDS, strict=True))
        coords = unit
    else:
        p = place.prime or 0
        alpha, u = valuation(r, p)
        c1 = 1 if legendre(u, p) == -1 else 0
        coords = (c1, (alpha + c1) & 1)
    return SquareClassVector(place=place, coords=coords)


def hilbert_symbol(a: int, b: int, place: Place) -> int:
    """Hilbert symbol (a, b)_v as a bit: 0 for +1, 1 for -1.

    Raises:
        InvalidInputError: a or b is zero or too large.
    """
    _check_integer(a, "a")
    _check_integer(b, "b")
    if place.kind is PlaceKind.INFINITY:
        return 1 if a < 0 and b < 0 else 0
    if place.kind is PlaceKind.TWO:
        alpha, u = valuation(a, 2)
        beta, w = valuation(b, 2)
        return (_eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)) & 1
    p = place.prime or 0
    alpha, u = valuation(a, p)
    beta, w = valuation(b, p)
    value = 1 if (alpha * beta * _eps(p)) & 1 else 0
    if beta & 1 and legendre(u, p) == -1:
        value ^= 1
    if alpha & 1 and legendre(w, p) == -1:
        value ^= 1
    return value


def gram_matrix(place: Place) -> BitMatrix:
    """Matrix of the Hilbert symbol on the basis representatives of ``place``.

    Raises:
        InvalidInputError: the place admits no Euclidean basis (p = 1 mod 4).
    """
    if not admits_euclidean_basis(place):
        raise InvalidInputError(
            f"{place.prime} = 1 mod 4: -1 is a square there and no Euclidean basis exists"
        )
    basis = basis_representatives(place)
    size = len(basis)
    rows = []
    for x in basis:
        row = 0
        for y in basis:
            row = (row << 1) | hilbert_symbol(x, y, place)
        rows.append(row)
    return BitMatrix.from_rows(rows, size)


def symbol_support(
    a: int, b: int, limit: int = PRIME_SEARCH["trial_division_limit"]
) -> list[Place]:
    """Places where (a, b)_v may be nontrivial: inf, 2 and the odd primes dividing ab.

    Raises:
        InvalidInputError: a or b is zero.
        FactorizationError: trial division below ``limit`` leaves a cofactor.
    """
    _check_integer(a, "a")
    _check_integer(b, "b")
    odd = set(factor_small(a, limit)) | set(factor_small(b, limit))
    odd.discard(2)
    places = [Place.infinity(), Place.two()] + [Place.odd(p) for p in sorted(odd)]
    logger.debug(f"Support of ({a}, {b}): {[v.label for v in places]}")
    return places
