"""Binary self-dual codes from Hilbert symbols over the rationals.

This package builds the self-dual code attached to a set of places
{inf, 2, p_1, ..., p_{n-2}} with every p_i = 3 mod 4, carries arbitrary
self-dual codes into boxed block-matrix form, and realizes any boxed matrix
as such a Hilbert code by searching for primes.
"""

__version__ = "0.1.0"
__author__ = "Hilbert Codes Team"

from .core import (
    DEFAULT_CONFIG,
    HilbertCodeError,
    InvalidInputError,
    NotBoxedError,
    NotSelfDualError,
    PlaceSetError,
    ToolkitConfig,
)
from .models import BitMatrix, BlockMatrix, Place, PlaceSet
from .tools import box_code, generator_matrix, realize, verify_place_set

__all__ = [
    "BitMatrix",
    "BlockMatrix",
    "Place",
    "PlaceSet",
    "ToolkitConfig",
    "DEFAULT_CONFIG",
    "HilbertCodeError",
    "InvalidInputError",
    "NotBoxedError",
    "NotSelfDualError",
    "PlaceSetError",
    "generator_matrix",
    "box_code",
    "realize",
    "verify_place_set",
]
