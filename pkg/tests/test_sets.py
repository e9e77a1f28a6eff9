import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprimax.arith import E_elements, Window, make_basis
from coprimax.sets import (CandidateSet, find_clique_in_elements,
                           find_coprime_clique, is_admissible,
                           is_pairwise_coprime)


def _set(elements, lo=None, hi=None):
    window = None if lo is None else Window(lo, hi)
    return CandidateSet.from_elements(elements, window)


def test_candidate_set_basics():
    s = _set([3, 5, 8], 1, 10)
    assert s.members() == [3, 5, 8]
    assert len(s) == 3
    assert 5 in s and 4 not in s
    assert s.difference([5]).members() == [3, 8]
    assert s.union([4]).members() == [3, 4, 5, 8]
    with pytest.raises(ValueError):
        _set([11], 1, 10)


def test_pairwise_coprime():
    assert is_pairwise_coprime([2, 3, 5, 7, 11])
    assert is_pairwise_coprime([4, 9, 25, 77])
    assert not is_pairwise_coprime([6, 10, 15])
    assert is_pairwise_coprime([])
    assert is_pairwise_coprime([1, -1])  # gcd(1, -1) = 1


def test_find_clique_returns_lex_least():
    s = _set([1, 2, 3, 5, 49, 11])
    w = find_coprime_clique(s, 5)
    assert w.elements == (1, 2, 3, 5, 11)


def test_E_sets_have_no_large_clique():
    b4 = make_basis(4)
    e48 = _set(E_elements(b4, 48), 1, 48)
    assert find_coprime_clique(e48, 5) is None
    a48 = e48.difference([7]).union([11])
    assert find_coprime_clique(a48, 5) is None


def test_admissibility_paper_sets():
    b3 = make_basis(3)
    e54 = set(E_elements(b3, 54))
    a54 = _set(sorted((e54 - {5, 25}) | {7, 49}), 1, 54)
    assert is_admissible(a54, 3).admissible

    full = _set(range(1, 12), 1, 11)
    verdict = is_admissible(full, 3)
    assert not verdict.admissible
    assert verdict.witness.elements == (1, 2, 3, 5)

    empty = CandidateSet.empty(Window(1, 10))
    assert is_admissible(empty, 3).admissible


def test_witness_is_subset_and_coprime():
    rng = random.Random(7)
    for _ in range(200):
        elems = rng.sample(range(1, 40), rng.randint(1, 14))
        s = _set(sorted(elems), 1, 40)
        w = find_coprime_clique(s, 3)
        if w is not None:
            assert set(w.elements) <= set(elems)
            assert is_pairwise_coprime(w.elements)


def test_clique_handles_zero_and_negatives():
    assert find_clique_in_elements([0, 1, -1], 3).elements == (-1, 0, 1)
    assert find_clique_in_elements([0, 2, 4], 2) is None
    assert find_clique_in_elements([-6, -35, 11], 3).elements == (-35, -6, 11)


@settings(max_examples=150, deadline=None)
@given(st.sets(st.integers(min_value=1, max_value=20), min_size=1, max_size=12),
       st.integers(min_value=1, max_value=5))
def test_clique_matches_exhaustive_enumeration(elements, size):
    elems = sorted(elements)
    got = find_clique_in_elements(elems, size)
    expected = next(
        (c for c in combinations(elems, size) if is_pairwise_coprime(c)), None)
    if expected is None:
        assert got is None
    else:
        # combinations() over a sorted list yields lexicographic order
        assert got.elements == expected


@settings(max_examples=80, deadline=None)
@given(st.sets(st.integers(min_value=1, max_value=30), min_size=2, max_size=14),
       st.data())
def test_clique_monotone_under_superset(elements, data):
    elems = sorted(elements)
    sub = sorted(data.draw(st.sets(st.sampled_from(elems), min_size=1)))
    for size in (2, 3):
        if find_clique_in_elements(sub, size) is not None:
            assert find_clique_in_elements(elems, size) is not None
