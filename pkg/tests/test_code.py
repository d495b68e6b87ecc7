"""Encoding, erasure decoding, MDS verification, duals, and complexity."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cgrcode import (
    CgrParams,
    ErasurePattern,
    OffsetVector,
    UnrecoverableError,
    build_code_array,
    decode,
    decode_complexity,
    dualize,
    encode,
    erase,
    update_complexity,
    verify_dual_mds,
    verify_mds,
)
from conftest import builtin_array, random_bits


def test_erasure_pattern_helpers(k2_params):
    pattern = ErasurePattern.of([3, 0])
    assert sorted(pattern.erased_columns) == [0, 3]
    assert pattern.survivors(5) == [1, 2, 4]
    pattern.validate_for(k2_params)
    with pytest.raises(ValueError):
        ErasurePattern.of([7]).validate_for(k2_params)


def test_encode_validates_info_keys(k2_array):
    with pytest.raises(ValueError):
        encode(k2_array, {0: 1})
    with pytest.raises(ValueError):
        encode(k2_array, {v: 1 for v in range(11)})


def test_encode_zero_data_gives_zero_cells(k2_array):
    codeword = encode(k2_array, {v: 0 for v in k2_array.info_ids()})
    assert all(bit == 0 for row in codeword.cell_values for bit in row)


def test_single_bit_touches_expected_cells(k2_array):
    bits = {v: 1 if v == 0 else 0 for v in k2_array.info_ids()}
    codeword = encode(k2_array, bits)
    hot = sum(bit for row in codeword.cell_values for bit in row)
    # One info cell plus one parity per incident edge (degree v1 + 1).
    assert hot == k2_array.params.v1 + 2


def test_decode_without_erasure_is_free(k2_array):
    bits = random_bits(k2_array, 3)
    codeword = encode(k2_array, bits)
    pattern = ErasurePattern.of([])
    report = decode(k2_array, erase(codeword, pattern), pattern)
    assert report.recovered == bits
    assert report.xor_count == 0
    assert report.peeling_sufficed
    assert decode_complexity(report, k2_array.params, pattern) == Fraction(0)


@pytest.mark.parametrize(
    "name,expected_xor",
    [("k2_c5", 5), ("k4_c7_a", 14), ("k6_c9_a", 27), ("k8_c11", 44)],
)
def test_single_column_decode_costs(name, expected_xor):
    array = builtin_array(name)
    bits = random_bits(array, 11)
    codeword = encode(array, bits)
    pattern = ErasurePattern.of([1])
    report = decode(array, erase(codeword, pattern), pattern)
    assert report.recovered == bits
    assert report.peeling_sufficed
    assert report.xor_count == expected_xor
    assert decode_complexity(report, array.params, pattern) == Fraction(1, 2)


def test_decode_all_two_column_patterns(k2_array):
    bits = random_bits(k2_array, 29)
    codeword = encode(k2_array, bits)
    for a in range(5):
        for b in range(a + 1, 5):
            pattern = ErasurePattern.of([a, b])
            report = decode(k2_array, erase(codeword, pattern), pattern)
            assert report.recovered == bits


def test_forced_elimination_agrees_with_peeling(k2_array):
    bits = random_bits(k2_array, 17)
    codeword = encode(k2_array, bits)
    pattern = ErasurePattern.of([2, 4])
    grid = erase(codeword, pattern)
    peeled = decode(k2_array, grid, pattern)
    eliminated = decode(k2_array, grid, pattern, force_elimination=True)
    assert peeled.recovered == eliminated.recovered == bits
    assert not eliminated.peeling_sufficed
    assert eliminated.elimination_xor_count > 0


def test_unrecoverable_erasure_raises(k2_array):
    bits = random_bits(k2_array, 5)
    codeword = encode(k2_array, bits)
    pattern = ErasurePattern.of([0, 1, 2, 3])
    with pytest.raises(UnrecoverableError) as excinfo:
        decode(k2_array, erase(codeword, pattern), pattern)
    exc = excinfo.value
    assert exc.rank < exc.nvars
    assert sorted(exc.pattern.erased_columns) == [0, 1, 2, 3]


def test_reencode_matches_original(k4a_array):
    bits = random_bits(k4a_array, 23)
    codeword = encode(k4a_array, bits)
    pattern = ErasurePattern.of([0, 5])
    report = decode(k4a_array, erase(codeword, pattern), pattern)
    assert encode(k4a_array, report.recovered) == codeword


def test_verify_mds_accepts_known_good(k2_array):
    result = verify_mds(k2_array)
    assert result.is_mds and bool(result)
    assert result.witness is None
    assert result.patterns_checked == 10  # C(5, 2) survivor pairs


def test_verify_mds_rejects_zero_offsets(k2_params):
    array = build_code_array(k2_params, OffsetVector.zeros(k2_params))
    result = verify_mds(array)
    assert not result.is_mds and not bool(result)
    assert sorted(result.witness.erased_columns) == [2, 3, 4]
    assert result.patterns_checked == 1  # stops at the first failure


def test_verify_mds_rejects_dual_input(k2_array):
    with pytest.raises(ValueError):
        verify_mds(dualize(k2_array))


def test_dualize_structure(k2_array):
    dual = dualize(k2_array)
    assert dual.is_dual()
    assert dual.params == k2_array.params
    assert len(dual.info_ids()) == 15  # one variable per edge
    arities = {len(cell.vertices) for row in dual.rows for cell in row if cell.is_parity}
    assert arities == {3}  # vertex degree v1 + 1
    assert dualize(dual) == k2_array


def test_dual_info_count_grows_with_size(k4a_array):
    dual = dualize(k4a_array)
    assert len(dual.info_ids()) == 70  # v1*v2*(v1+1)/2 edges


def test_verify_dual_mds(k2_array):
    result = verify_dual_mds(k2_array)  # primal input is dualized internally
    assert result.is_mds
    assert result.patterns_checked == 10
    assert verify_dual_mds(dualize(k2_array)).is_mds


def test_update_complexity_formula():
    assert update_complexity(CgrParams.from_v1(2)) == Fraction(3, 10)
    assert update_complexity(CgrParams.from_v1(4)) == Fraction(5, 28)
