"""
sr-pair 收集、GF(2) 消元与平方同余测试
"""

from fractions import Fraction

import pytest

from schnorr_qaoa.errors import CandidateInconsistencyError, InvalidInputError
from schnorr_qaoa.lattice import (
    BabaiResult,
    Permutation,
    babai_nearest_plane_ceil,
    build_prime_lattice,
    lll_reduce,
)
from schnorr_qaoa.numtheory import first_primes
from schnorr_qaoa.relations import (
    FactorResult,
    RelationSet,
    bitstring_to_candidate,
    exponents_to_uv,
    gf2_left_nullspace,
    pack_bits,
    selected_indices,
    try_factor,
    verify_sr_pair,
)
from tests.conftest import REFERENCE_PAIRS


def _relation_set(pairs, N, b1, b2):
    rel = RelationSet(threshold=b2.size + 1)
    for u, v in pairs:
        pair = verify_sr_pair(u, v, N, b2, b1)
        assert pair is not None, (u, v)
        rel.add(pair)
    return rel


class TestExponents:
    def test_exponents_to_uv(self, b1):
        assert exponents_to_uv((0, 0, 0, 0, 0, 0), b1) == (1, 1)
        assert exponents_to_uv((2, -1, 1, 0, 0, 0), b1) == (20, 3)
        assert exponents_to_uv((0, 2, 0, 0, 0, 1), b1) == (117, 1)
        assert exponents_to_uv((0, 2, 0, 0, 0, 2), b1) == (1521, 1)
        assert exponents_to_uv((3, 0, 0, 3, -2, 0), b1) == (2744, 121)

    def test_length_mismatch(self, b1):
        with pytest.raises(InvalidInputError):
            exponents_to_uv((1, 2), b1)


class TestVerifySrPair:
    def test_accepted(self, b1, b2):
        pair = verify_sr_pair(41503, 25, 1591, b2, b1)
        assert pair is not None
        assert pair.s == 1728
        pair = verify_sr_pair(5005, 3, 1591, b2, b1)
        assert pair is not None
        assert pair.s == 232
        assert str(pair) == "(5005, 3)"

    def test_rejected(self, b1, b2):
        # 2 - 1591 = -1589 = -7 · 227
        assert verify_sr_pair(2, 1, 1591, b2, b1) is None
        assert verify_sr_pair(1, 1, 1591, b2, b1) is None
        assert verify_sr_pair(15, 1, 15, b2, b1) is None

    def test_invalid(self, b2):
        with pytest.raises(InvalidInputError):
            verify_sr_pair(0, 1, 1591, b2)

    def test_reference_pairs(self, b1, b2):
        for u, v in REFERENCE_PAIRS:
            pair = verify_sr_pair(u, v, 1591, b2, b1)
            assert pair is not None, (u, v)
            assert (pair.u - pair.s) % 1591 == 0
            assert pair.s_fact.reconstruct(b2) == pair.s
            assert pair.u_fact.reconstruct(b1) == pair.u


class TestRelationSet:
    def test_dedup(self, b1, b2):
        rel = RelationSet(threshold=12)
        pair = verify_sr_pair(1521, 1, 1591, b2, b1)
        assert rel.add(pair)
        assert not rel.add(verify_sr_pair(1521, 1, 1591, b2, b1))
        assert len(rel) == 1
        assert (1521, 1) in rel
        assert not rel.is_complete

    def test_complete(self, b1, b2):
        rel = _relation_set(REFERENCE_PAIRS, 1591, b1, b2)
        assert len(rel) == 12
        assert rel.is_complete
        assert [p.key for p in rel] == REFERENCE_PAIRS

    def test_threshold_validation(self):
        with pytest.raises(InvalidInputError):
            RelationSet(threshold=0)


class TestGf2:
    def test_pack_bits(self):
        assert pack_bits([1, 0, 3, 2]) == 0b0101

    def test_dependency(self):
        assert gf2_left_nullspace([0b011, 0b101, 0b110]) == [0b111]
        assert gf2_left_nullspace([0b01, 0b10]) == []
        assert gf2_left_nullspace([0b00, 0b01]) == [0b01]
        assert selected_indices(0b10110) == [1, 2, 4]

    def test_width_check(self):
        with pytest.raises(ValueError):
            gf2_left_nullspace([0b100], width=2)

    def test_dependencies_are_even(self):
        rows = [0b1011, 0b0110, 0b1101, 0b0011, 0b1000, 0b0111]
        for mask in gf2_left_nullspace(rows, width=4):
            combined = 0
            for i in selected_indices(mask):
                combined ^= rows[i]
            assert combined == 0


class TestTryFactor:
    def test_reference_run_factors(self, b1, b2):
        rel = _relation_set(REFERENCE_PAIRS[:10], 1591, b1, b2)
        assert try_factor(rel, 1591, b1, b2) == FactorResult(37, 43)

    def test_nine_pairs_not_enough(self, b1, b2):
        rel = _relation_set(REFERENCE_PAIRS[:9], 1591, b1, b2)
        assert try_factor(rel, 1591, b1, b2) is None

    def test_all_pairs(self, b1, b2):
        result = try_factor(_relation_set(REFERENCE_PAIRS, 1591, b1, b2), 1591, b1, b2)
        assert str(result) == "1591 = 37 × 43"

    def test_empty(self, b1, b2):
        assert try_factor(RelationSet(threshold=12), 1591, b1, b2) is None

    def test_single_square_relation(self):
        base = first_primes(3)
        # 81 - 77 = 4：u 与 s 都是平方数，X = 9，Y = 2
        rel = _relation_set([(81, 1)], 77, base, base)
        assert try_factor(rel, 77, base, base) == FactorResult(7, 11)

    def test_single_non_square_relation(self):
        base = first_primes(3)
        rel = _relation_set([(80, 1)], 77, base, base)
        assert try_factor(rel, 77, base, base) is None

    def test_factor_result(self):
        assert FactorResult.from_divisor(1591, 43) == FactorResult(37, 43)
        assert FactorResult(37, 43).N == 1591
        with pytest.raises(InvalidInputError):
            FactorResult(43, 37)
        with pytest.raises(InvalidInputError):
            FactorResult.from_divisor(1591, 5)


class TestCandidate:
    def test_candidates_are_integral(self, reference_lattice, reference_reduced):
        babai = babai_nearest_plane_ceil(reference_reduced, reference_lattice.target)
        for k in range(64):
            x = format(k, "06b")
            e = bitstring_to_candidate(x, babai, reference_reduced, reference_lattice)
            assert len(e) == 6

    def test_zero_bitstring_is_babai_vector(self, reference_lattice, reference_reduced):
        babai = babai_nearest_plane_ceil(reference_reduced, reference_lattice.target)
        e = bitstring_to_candidate("000000", babai, reference_reduced, reference_lattice)
        weights = reference_lattice.weights
        assert tuple(w * ei for w, ei in zip(weights, e, strict=True)) == babai.approx_vector[:6]

    def test_wrong_length(self, reference_lattice, reference_reduced):
        babai = babai_nearest_plane_ceil(reference_reduced, reference_lattice.target)
        with pytest.raises(InvalidInputError):
            bitstring_to_candidate("0101", babai, reference_reduced, reference_lattice)

    def test_inconsistent_vector(self):
        lattice = build_prime_lattice(
            1591, first_primes(4), Fraction(3, 2), Permutation.identity(4)
        )
        reduced = lll_reduce(lattice.basis)
        bogus = BabaiResult(
            coefficients=(0, 0, 0, 0),
            real_coefficients=(Fraction(0),) * 4,
            approx_vector=(0, 0, 1, 0, 0),
            residual=(0, 0, 0, 0, 0),
        )
        with pytest.raises(CandidateInconsistencyError):
            bitstring_to_candidate("0000", bogus, reduced, lattice)
