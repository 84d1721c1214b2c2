"""Tests for Hilbert code generator matrices."""

import itertools

import pytest

from hilbert_codes.core import InvalidInputError, PlaceSetError, ToolkitConfig
from hilbert_codes.models import PlaceSet
from hilbert_codes.tools import gf2core
from hilbert_codes.tools.boxed import blocks_of, is_boxed
from hilbert_codes.tools.hilbert_code import (
    code_metadata,
    generator_matrix,
    identify_code,
    s_unit_generators,
    s_unit_vector,
    total_pairing,
    verify_place_set,
)

from .oracles import E8_BLOCKS, E8_ROWS

PRIMES_3_MOD_4 = [
    p for p in range(3, 1000) if p % 4 == 3 and all(p % d for d in range(3, p, 2))
]


class TestPlaceSets:
    """Test place set validation."""

    @pytest.mark.unit
    def test_canonical_order(self):
        """Test primes are stored ascending."""
        assert verify_place_set([7, 3]).primes == (3, 7)
        assert verify_place_set([]).n == 2
        assert PlaceSet(primes=(7, 3)).primes == (3, 7)

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "candidates, offender, fragment",
        [
            ([3, 2], 2, "implicit"),
            ([3, 9], 9, "composite"),
            ([5], 5, "1 mod 4"),
            ([3, 7, 3], 3, "twice"),
            ([-3], -3, "not a prime"),
        ],
    )
    def test_rejections_name_the_offender(self, candidates, offender, fragment):
        """Test each invalid entry is reported with its condition."""
        with pytest.raises(PlaceSetError) as excinfo:
            verify_place_set(candidates)
        assert excinfo.value.prime == offender
        assert fragment in str(excinfo.value)

    @pytest.mark.unit
    def test_model_rejects_bad_primes(self):
        """Test the model validator."""
        with pytest.raises(ValueError):
            PlaceSet(primes=(13,))
        with pytest.raises(ValueError):
            PlaceSet(primes=(3, 3))


class TestGeneratorMatrix:
    """Test generator construction on the reference codes."""

    @pytest.mark.unit
    def test_minimal_place_set(self):
        """Test S = {inf, 2} gives the length-4 code."""
        m = generator_matrix(PlaceSet())
        assert m.to_strings() == ["0110", "1111"]
        assert gf2core.is_self_dual_generator(m)
        assert code_metadata(PlaceSet()).min_distance == 2

    @pytest.mark.unit
    def test_e8(self):
        """Test S = {inf, 2, 3, 7}."""
        m = generator_matrix(PlaceSet(primes=(3, 7)))
        assert m.to_strings() == E8_ROWS
        assert blocks_of(m).to_strings() == E8_BLOCKS
        assert gf2core.weight_enumerator(m).counts == {0: 1, 4: 14, 8: 1}
        assert identify_code(m) == "e8"

    @pytest.mark.slow
    def test_g24(self, golay_places):
        """Test the Golay place set."""
        metadata = code_metadata(golay_places)
        assert metadata.generator.n_rows == 12
        assert metadata.generator.n_cols == 24
        assert gf2core.is_self_dual_generator(metadata.generator)
        assert metadata.doubly_even
        assert metadata.min_distance == 8
        assert metadata.weight_enumerator is not None
        assert metadata.weight_enumerator.as_pairs() == [
            [0, 1], [8, 759], [12, 2576], [16, 759], [24, 1],
        ]
        assert metadata.identified_as == "g24"
        assert is_boxed(metadata.boxed_blocks)

    @pytest.mark.property
    def test_pairs_of_primes_give_boxed_self_dual_codes(self):
        """Test every pair of primes 3 mod 4 below 1000 obeys reciprocity."""
        for p, q in itertools.combinations(PRIMES_3_MOD_4, 2):
            m = generator_matrix(PlaceSet(primes=(p, q)))
            assert gf2core.is_self_dual_generator(m)
            blocks = blocks_of(m)
            assert is_boxed(blocks)
            # b_12 is 00 exactly when p is a square mod q
            assert (blocks.block(1, 2) == 0) == (pow(p, (q - 1) // 2, q) == 1)

    @pytest.mark.property
    def test_random_place_sets(self, rng):
        """Test assorted larger place sets."""
        for _ in range(30):
            primes = rng.sample(PRIMES_3_MOD_4, rng.randint(0, 8))
            m = generator_matrix(PlaceSet(primes=tuple(primes)))
            assert gf2core.is_self_dual_generator(m)
            assert is_boxed(blocks_of(m))

    @pytest.mark.unit
    def test_metadata_skips_enumeration_above_guard(self):
        """Test the guard leaves the enumerator empty."""
        config = ToolkitConfig(enumerator_rank_guard=3)
        metadata = code_metadata(PlaceSet(primes=(3, 7)), config)
        assert metadata.weight_enumerator is None
        assert metadata.min_distance is None
        assert metadata.doubly_even


class TestSUnits:
    """Test the diagonal embedding of S-units."""

    @pytest.mark.unit
    def test_generators_are_the_rows(self):
        """Test each generator maps onto its generator row."""
        places = PlaceSet(primes=(3, 7))
        m = generator_matrix(places)
        assert s_unit_generators(places) == [3, 7, 2, -1]
        for row, unit in zip(m.rows, s_unit_generators(places), strict=True):
            assert s_unit_vector(unit, places) == row

    @pytest.mark.unit
    def test_products_map_to_sums(self):
        """Test the embedding is a homomorphism."""
        places = PlaceSet(primes=(3, 7))
        assert s_unit_vector(-42, places) == (
            s_unit_vector(-1, places)
            ^ s_unit_vector(2, places)
            ^ s_unit_vector(3, places)
            ^ s_unit_vector(7, places)
        )
        assert s_unit_vector(9, places) == 0

    @pytest.mark.unit
    def test_non_units_rejected(self):
        """Test units with primes outside S."""
        with pytest.raises(InvalidInputError):
            s_unit_vector(5, PlaceSet(primes=(3, 7)))
        with pytest.raises(InvalidInputError):
            s_unit_vector(0, PlaceSet())

    @pytest.mark.unit
    def test_total_pairing_vanishes(self):
        """Test the product formula restricted to S-units."""
        places = PlaceSet(primes=(3, 7, 11))
        units = s_unit_generators(places)
        for a, b in itertools.product(units, repeat=2):
            assert total_pairing(a, b, places) == 0
