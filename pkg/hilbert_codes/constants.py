"""Constants and configuration values for the Hilbert code toolkit."""

from typing import Any

# GF(2) brute-force limits
GF2_LIMITS = {
    "enumerator_rank_guard": 28,
    # Codewords are materialised in numpy blocks of 2**partition_bits
    "partition_bits": 16,
    # numpy packing holds one row per uint64 word
    "packed_word_bits": 64,
}

# Boxed matrix enumeration limits
ENUMERATION_LIMITS = {
    "min_boxed_dimension": 2,
    "max_boxed_dimension": 8,
}

# Prime search parameters
PRIME_SEARCH: dict[str, Any] = {
    "default_bound": 2**32,
    "max_bound": 2**63,
    "integer_bits": 63,
    "trial_division_limit": 10**6,
    # Deterministic for every n < 2**64
    "miller_rabin_witnesses": (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37),
}

# Euclidean basis representatives of the local square-class groups
PLACE_BASES: dict[str, tuple[int, ...]] = {
    "infinity": (-1,),
    "two": (-2, -10, -5),
}

# Square-class coordinates at the place 2, keyed by the odd unit part mod 8
TWO_ADIC_UNIT_COORDS: dict[int, tuple[int, ...]] = {
    1: (0, 0, 0),
    3: (0, 0, 1),
    5: (1, 1, 0),
    7: (1, 1, 1),
}
TWO_ADIC_UNIFORMIZER_COORDS: tuple[int, ...] = (0, 1, 1)

# Reference codes reachable from the construction
KNOWN_CODES: dict[str, dict[str, Any]] = {
    "e8": {
        "places": (3, 7),
        "length": 8,
        "weight_enumerator": {0: 1, 4: 14, 8: 1},
    },
    "g24": {
        "places": (7, 19, 31, 131, 179, 367, 883, 1223, 1307, 39079),
        "length": 24,
        "weight_enumerator": {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1},
    },
}
