"""Offset-vector search and the built-in fixture set."""

from __future__ import annotations

import pytest

from cgrcode import (
    BUILTIN_VECTORS,
    BudgetExceededError,
    CgrParams,
    SearchSpec,
    search,
    validate_fixture_set,
)
from cgrcode.search import params_for_offset_length


def test_params_for_offset_length():
    assert params_for_offset_length(5) == CgrParams.from_v1(2)
    assert params_for_offset_length(14) == CgrParams.from_v1(4)
    assert params_for_offset_length(27) == CgrParams.from_v1(6)
    assert params_for_offset_length(44) == CgrParams.from_v1(8)
    with pytest.raises(ValueError):
        params_for_offset_length(6)


def test_builtin_vector_lengths():
    assert set(BUILTIN_VECTORS) == {
        "k2_c5",
        "k4_c7_a",
        "k4_c7_b",
        "k4_c7_c",
        "k4_c7_d",
        "k6_c9_a",
        "k6_c9_b",
        "k6_c9_c",
        "k8_c11",
    }
    for vector in BUILTIN_VECTORS.values():
        params_for_offset_length(len(vector))  # every length maps to a size


def test_exhaustive_search_fixed_prefix():
    spec = SearchSpec(params=CgrParams.from_v1(2))
    vectors, stats = search(spec)
    assert (stats.trials, stats.hits, stats.space) == (5, 1, 5)
    assert [tuple(v) for v in vectors] == [(0, 1, 2, 2, 4)]


def test_exhaustive_search_free_prefix():
    spec = SearchSpec(params=CgrParams.from_v1(2), fix_prefix=False)
    vectors, stats = search(spec)
    assert (stats.trials, stats.hits, stats.space) == (3125, 50, 3125)
    assert len(vectors) == 50
    assert (0, 1, 2, 2, 4) in {tuple(v) for v in vectors}


def test_exhaustive_stop_after_truncates_list_only():
    spec = SearchSpec(params=CgrParams.from_v1(2), fix_prefix=False, stop_after=3)
    vectors, stats = search(spec)
    assert len(vectors) == 3
    assert (stats.trials, stats.hits) == (3125, 50)  # stats still cover the full scan


def test_random_search_is_reproducible():
    spec = SearchSpec(params=CgrParams.from_v1(2), strategy="random", seed=9, max_trials=50)
    first = search(spec)
    second = search(spec)
    assert first == second
    vectors, stats = first
    assert stats.trials == 50
    assert stats.hits == len(vectors) > 0


def test_random_search_stop_after():
    spec = SearchSpec(
        params=CgrParams.from_v1(2), strategy="random", seed=9, max_trials=50, stop_after=1
    )
    vectors, stats = search(spec)
    assert len(vectors) == 1
    assert stats.trials < 50


def test_budget_guard():
    spec = SearchSpec(params=CgrParams.from_v1(4), fix_prefix=False)
    with pytest.raises(BudgetExceededError):
        search(spec)
    with pytest.raises(BudgetExceededError):
        search(SearchSpec(params=CgrParams.from_v1(2), fix_prefix=False), budget=100)


def test_validate_fixture_set_defaults():
    results = validate_fixture_set()
    assert set(results) == set(BUILTIN_VECTORS)
    assert all(res.is_mds for res in results.values())


def test_validate_fixture_set_flags_bad_vector():
    results = validate_fixture_set({"zeros": (0, 0, 0, 0, 0)})
    assert not results["zeros"].is_mds
