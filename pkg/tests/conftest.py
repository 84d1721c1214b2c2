"""Test configuration for the Hilbert code toolkit."""

import random

import pytest

from hilbert_codes.constants import KNOWN_CODES
from hilbert_codes.models import BitMatrix, BlockMatrix, PlaceSet

from .oracles import E8_BLOCKS, E8_ROWS, blocks_from_strings


@pytest.fixture
def e8_generator() -> BitMatrix:
    """Generator of the Hilbert code of S = {inf, 2, 3, 7}."""
    return BitMatrix.from_strings(E8_ROWS)


@pytest.fixture
def e8_boxed() -> BlockMatrix:
    """Block view of the e8 generator."""
    return blocks_from_strings(E8_BLOCKS)


@pytest.fixture
def small_code() -> BitMatrix:
    """The length-4 code {0000, 0110, 1001, 1111}."""
    return BitMatrix.from_strings(["0110", "1111"])


@pytest.fixture
def golay_places() -> PlaceSet:
    """Place set whose Hilbert code is the extended Golay code."""
    return PlaceSet(primes=KNOWN_CODES["g24"]["places"])


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized suites are reproducible."""
    return random.Random(20240831)
