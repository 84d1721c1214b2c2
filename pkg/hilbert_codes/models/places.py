"""Places of Q, square-class vectors and place sets."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..primes import is_odd_prime


class PlaceKind(str, Enum):
    """Kinds of places of Q used by the construction."""

    INFINITY = "infinity"
    TWO = "two"
    ODD = "odd"


class Place(BaseModel):
    """A place of Q: the real place, the prime 2, or an odd prime."""

    model_config = ConfigDict(frozen=True)

    kind: PlaceKind
    prime: int | None = Field(None, description="The odd prime for kind=odd")

    @model_validator(mode="after")
    def _check_prime(self) -> Place:
        if self.kind is PlaceKind.ODD:
            if self.prime is None or not is_odd_prime(self.prime):
                raise ValueError(f"odd place needs an odd prime, got {self.prime}")
        elif self.prime is not None:
            raise ValueError(f"{self.kind.value} place takes no prime")
        return self

    @classmethod
    def infinity(cls) -> Place:
        return cls(kind=PlaceKind.INFINITY)

    @classmethod
    def two(cls) -> Place:
        return cls(kind=PlaceKind.TWO)

    @classmethod
    def odd(cls, p: int) -> Place:
        return cls(kind=PlaceKind.ODD, prime=p)

    @property
    def dimension(self) -> int:
        """Dimension of the local square-class group over F2."""
        return {PlaceKind.INFINITY: 1, PlaceKind.TWO: 3, PlaceKind.ODD: 2}[self.kind]

    @property
    def label(self) -> str:
        if self.kind is PlaceKind.INFINITY:
            return "inf"
        if self.kind is PlaceKind.TWO:
            return "2"
        return str(self.prime)


class SquareClassVector(BaseModel):
    """Coordinates of a square class in Q_v*/(Q_v*)^2 relative to the Euclidean basis."""

    model_config = ConfigDict(frozen=True)

    place: Place
    coords: tuple[int, ...]

    @model_validator(mode="after")
    def _check_coords(self) -> SquareClassVector:
        if len(self.coords) != self.place.dimension:
            raise ValueError(
                f"{self.place.label} needs {self.place.dimension} coordinates, "
                f"got {len(self.coords)}"
            )
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError("coordinates must be bits")
        return self

    def __xor__(self, other: SquareClassVector) -> SquareClassVector:
        if other.place != self.place:
            raise ValueError("square classes live at different places")
        return SquareClassVector(
            place=self.place,
            coords=tuple(a ^ b for a, b in zip(self.coords, other.coords, strict=True)),
        )

    def dot(self, other: SquareClassVector) -> int:
        return sum(a & b for a, b in zip(self.coords, other.coords, strict=True)) & 1


class PlaceSet(BaseModel):
    """The set S = {inf, 2, p_1, ..., p_{n-2}} with every p_i = 3 mod 4.

    Only the odd primes are stored; inf and 2 are always present.
    """

    model_config = ConfigDict(frozen=True)

    primes: tuple[int, ...] = Field(
        default=(), description="Distinct odd primes, each 3 mod 4, ascending"
    )

    @field_validator("primes")
    @classmethod
    def _check_primes(cls, primes: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be distinct")
        for p in primes:
            if not is_odd_prime(p):
                raise ValueError(f"{p} is not an odd prime")
            if p % 4 != 3:
                raise ValueError(f"{p} is not 3 mod 4")
        return tuple(sorted(primes))

    @property
    def n(self) -> int:
        """Block dimension: number of odd primes plus two."""
        return len(self.primes) + 2

    @property
    def length(self) -> int:
        return 2 * self.n

    def places(self) -> list[Place]:
        """Places in column order: the odd primes ascending, then 2, then inf."""
        return [Place.odd(p) for p in self.primes] + [Place.two(), Place.infinity()]
