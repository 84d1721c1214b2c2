"""Core error types and configuration for the Hilbert code toolkit."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .constants import ENUMERATION_LIMITS, GF2_LIMITS, PRIME_SEARCH


class HilbertCodeError(Exception):
    """Root of every error raised by the toolkit."""

    pass


class InvalidInputError(HilbertCodeError, ValueError):
    """Input rejected before any computation."""

    pass


class PlaceSetError(InvalidInputError):
    """A candidate prime cannot belong to a place set."""

    def __init__(self, prime: int, condition: str) -> None:
        self.prime = prime
        self.condition = condition
        super().__init__(f"{prime} {condition}")


class GuardExceededError(HilbertCodeError):
    """A brute-force or enumeration guard refused the request."""

    pass


class NotSelfDualError(InvalidInputError):
    """The generator matrix does not span a self-dual code."""

    pass


class NotBoxedError(InvalidInputError):
    """The block matrix violates one of the boxed properties."""

    pass


class FactorizationError(HilbertCodeError):
    """Trial division left an unfactored cofactor."""

    def __init__(self, value: int, cofactor: int, limit: int) -> None:
        self.value = value
        self.cofactor = cofactor
        super().__init__(
            f"{value} has cofactor {cofactor} with no prime factor below {limit}"
        )


class BoxingError(HilbertCodeError):
    """Internal consistency failure while boxing a generator matrix."""

    pass


class ToolkitConfig(BaseModel):
    """Tunable limits shared by the tools and the CLI."""

    model_config = ConfigDict(frozen=True)

    enumerator_rank_guard: int = Field(
        GF2_LIMITS["enumerator_rank_guard"],
        ge=1,
        le=GF2_LIMITS["enumerator_rank_guard"],
        description="Largest rank walked by brute-force weight enumeration",
    )
    max_boxed_dimension: int = Field(
        ENUMERATION_LIMITS["max_boxed_dimension"],
        ge=ENUMERATION_LIMITS["min_boxed_dimension"],
        le=ENUMERATION_LIMITS["max_boxed_dimension"],
        description="Largest block dimension accepted by enumerate_boxed",
    )
    default_prime_bound: int = Field(
        PRIME_SEARCH["default_bound"],
        ge=3,
        le=PRIME_SEARCH["max_bound"],
        description="Upper bound on primes tried during realization",
    )


DEFAULT_CONFIG = ToolkitConfig()
