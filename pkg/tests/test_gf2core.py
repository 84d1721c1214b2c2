"""Tests for the packed F2 linear algebra kernels."""

import pytest

from hilbert_codes.core import GuardExceededError, InvalidInputError
from hilbert_codes.models import BitMatrix, WeightEnumerator
from hilbert_codes.tools import gf2core
from hilbert_codes.tools.boxed import matrix_of

from .oracles import (
    enumerator_of,
    naive_rank,
    random_boxed,
    scramble,
    span,
    to_bit_lists,
)


class TestBitMatrix:
    """Test the packed matrix model."""

    @pytest.mark.unit
    def test_column_zero_is_most_significant(self):
        """Test the bit order of packed rows."""
        m = BitMatrix.from_strings(["0110", "1000"])
        assert m.rows == (0b0110, 0b1000)
        assert m.bit(0, 1) == 1 and m.bit(0, 0) == 0
        assert m.bit(1, 0) == 1
        assert m.to_strings() == ["0110", "1000"]

    @pytest.mark.unit
    def test_ragged_rows_rejected(self):
        """Test rows of unequal length."""
        with pytest.raises(InvalidInputError):
            BitMatrix.from_strings(["011", "10"])
        with pytest.raises(InvalidInputError):
            BitMatrix.from_strings(["012"])
        with pytest.raises(InvalidInputError):
            BitMatrix.from_strings([])

    @pytest.mark.unit
    def test_row_overflow_rejected(self):
        """Test a row wider than n_cols fails validation."""
        with pytest.raises(ValueError):
            BitMatrix(n_rows=1, n_cols=2, rows=(0b100,))

    @pytest.mark.unit
    def test_weight_enumerator_model_checks_total(self):
        """Test counts must describe a linear code."""
        with pytest.raises(ValueError):
            WeightEnumerator(length=4, counts={0: 1, 2: 2})
        enum = WeightEnumerator(length=4, counts={0: 1, 2: 2, 4: 1})
        assert enum.dimension == 2
        assert enum.is_symmetric()
        assert enum.as_pairs() == [[0, 1], [2, 2], [4, 1]]


class TestRankAndEchelon:
    """Test elimination against a list-of-lists oracle."""

    @pytest.mark.property
    def test_rank_matches_oracle(self, rng):
        """Test rank on random matrices of assorted shapes."""
        for _ in range(300):
            rows, cols = rng.randint(1, 12), rng.randint(1, 70)
            m = BitMatrix.from_rows((rng.getrandbits(cols) for _ in range(rows)), cols)
            assert gf2core.rank(m) == naive_rank(to_bit_lists(m))

    @pytest.mark.property
    def test_rank_of_transpose(self, rng):
        """Test row rank equals column rank."""
        for _ in range(200):
            rows, cols = rng.randint(1, 12), rng.randint(1, 40)
            m = BitMatrix.from_rows((rng.getrandbits(cols) for _ in range(rows)), cols)
            t = gf2core.transpose(m)
            assert (t.n_rows, t.n_cols) == (cols, rows)
            assert gf2core.rank(t) == gf2core.rank(m)

    @pytest.mark.property
    def test_echelon_combinations_reproduce_rows(self, rng):
        """Test each basis row equals the recorded sum of input rows."""
        for _ in range(100):
            rows = [rng.getrandbits(20) for _ in range(rng.randint(1, 10))]
            for row, pivot, combo in gf2core.echelon(rows, 20):
                assert row & pivot
                total = 0
                for i, r in enumerate(rows):
                    if (combo >> i) & 1:
                        total ^= r
                assert total == row

    @pytest.mark.unit
    def test_degenerate_ranks(self):
        """Test identity and zero matrices."""
        assert gf2core.rank(BitMatrix.identity(3)) == 3
        assert gf2core.rank(BitMatrix.zeros(2, 4)) == 0

    @pytest.mark.unit
    def test_solve_left(self, e8_generator):
        """Test the all-ones word is reached from the e8 rows."""
        coefficients = gf2core.solve_left(e8_generator, e8_generator.all_ones())
        assert coefficients == (0, 0, 0, 1)
        assert gf2core.solve_left(e8_generator, 0) == (0, 0, 0, 0)
        assert gf2core.solve_left(BitMatrix.from_strings(["1100"]), 0b0011) is None

    @pytest.mark.property
    def test_solve_left_random(self, rng):
        """Test solutions combine back to the target."""
        for _ in range(100):
            m = BitMatrix.from_rows((rng.getrandbits(16) for _ in range(6)), 16)
            target = 0
            for row in m.rows:
                if rng.getrandbits(1):
                    target ^= row
            coefficients = gf2core.solve_left(m, target)
            assert coefficients is not None
            total = 0
            for c, row in zip(coefficients, m.rows, strict=True):
                if c:
                    total ^= row
            assert total == target

    @pytest.mark.unit
    def test_row_space_equal(self):
        """Test spans compare independently of the generators."""
        a = BitMatrix.from_strings(["1100", "0011"])
        b = BitMatrix.from_strings(["1111", "0011"])
        c = BitMatrix.from_strings(["1010", "0101"])
        assert gf2core.row_space_equal(a, b)
        assert not gf2core.row_space_equal(a, c)
        with pytest.raises(InvalidInputError):
            gf2core.row_space_equal(a, BitMatrix.from_strings(["110"]))


class TestSelfDuality:
    """Test the self-dual and doubly-even predicates."""

    @pytest.mark.unit
    def test_small_codes(self, small_code, e8_generator):
        """Test known self-dual generators."""
        assert gf2core.is_self_dual_generator(small_code)
        assert gf2core.is_self_dual_generator(e8_generator)
        assert gf2core.is_doubly_even(e8_generator)
        assert not gf2core.is_doubly_even(small_code)

    @pytest.mark.unit
    def test_rank_deficient_is_not_self_dual(self):
        """Test a self-orthogonal but too-small span."""
        assert not gf2core.is_self_dual_generator(BitMatrix.from_strings(["1111", "1111"]))
        assert not gf2core.is_self_dual_generator(BitMatrix.from_strings(["1000", "0100"]))

    @pytest.mark.unit
    def test_odd_length_rejected(self):
        """Test odd lengths raise."""
        with pytest.raises(InvalidInputError):
            gf2core.is_self_dual_generator(BitMatrix.from_strings(["111"]))

    @pytest.mark.property
    def test_self_dual_rows_are_even_and_span_all_ones(self, rng):
        """Test self-dual rows are even and span the all-ones word."""
        for _ in range(100):
            m, _, _ = scramble(matrix_of(random_boxed(rng.randint(2, 10), rng)), rng)
            assert gf2core.is_self_dual_generator(m)
            assert all(row.bit_count() % 2 == 0 for row in m.rows)
            coefficients = gf2core.solve_left(m, m.all_ones())
            assert coefficients is not None
            total = 0
            for c, row in zip(coefficients, m.rows, strict=True):
                if c:
                    total ^= row
            assert total == m.all_ones()


class TestWeightEnumerator:
    """Test brute-force enumeration against explicit spans."""

    @pytest.mark.unit
    def test_e8_profile(self, e8_generator):
        """Test the extended Hamming code."""
        enum = gf2core.weight_enumerator(e8_generator)
        assert enum.counts == {0: 1, 4: 14, 8: 1}
        assert gf2core.min_distance(e8_generator) == 4

    @pytest.mark.property
    def test_matches_explicit_span(self, rng):
        """Test packed and oracle counts on random matrices."""
        for _ in range(60):
            cols = rng.randint(1, 40)
            rows = [rng.getrandbits(cols) for _ in range(rng.randint(1, 9))]
            m = BitMatrix.from_rows(rows, cols)
            assert gf2core.weight_enumerator(m).counts == enumerator_of(span(rows))

    @pytest.mark.unit
    def test_wide_rows_use_integer_walk(self):
        """Test lengths above 64 bits."""
        rows = [(1 << 70) - 1, 0b11, 1 << 69 | 1 << 68]
        m = BitMatrix.from_rows(rows, 70)
        assert gf2core.weight_enumerator(m).counts == enumerator_of(span(rows))

    @pytest.mark.slow
    def test_partitioned_enumeration(self):
        """Test a rank large enough to split the basis across Gray offsets."""
        rows = [1 << (30 - i) for i in range(18)]
        m = BitMatrix.from_rows(rows, 31)
        enum = gf2core.weight_enumerator(m)
        assert enum.total == 1 << 18
        assert enum.counts[9] == 48620

    @pytest.mark.unit
    def test_guard(self):
        """Test the rank guard refuses large enumerations."""
        m = BitMatrix.identity(6)
        with pytest.raises(GuardExceededError):
            gf2core.weight_enumerator(m, guard=5)

    @pytest.mark.unit
    def test_zero_space_has_no_distance(self):
        """Test min distance of the zero code."""
        with pytest.raises(InvalidInputError):
            gf2core.min_distance(BitMatrix.zeros(2, 4))


class TestPermutationAndProducts:
    """Test column permutations and products."""

    @pytest.mark.unit
    def test_apply_column_permutation(self):
        """Test column j of the result is column perm[j] of the input."""
        m = BitMatrix.from_strings(["1100", "1111"])
        out = gf2core.apply_column_permutation(m, (2, 1, 0, 3))
        assert out.to_strings() == ["0110", "1111"]
        with pytest.raises(InvalidInputError):
            gf2core.apply_column_permutation(m, (0, 0, 1, 2))

    @pytest.mark.unit
    def test_multiply_and_transpose(self):
        """Test a product against a hand computation."""
        a = BitMatrix.from_strings(["10", "11"])
        b = BitMatrix.from_strings(["011", "110"])
        assert gf2core.multiply(a, b).to_strings() == ["011", "101"]
        assert gf2core.transpose(b).to_strings() == ["01", "11", "10"]
        with pytest.raises(InvalidInputError):
            gf2core.multiply(b, b)
