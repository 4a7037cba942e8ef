import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truncsym.monomial_box import (
    Box,
    Matching,
    box_size,
    dominance_matching,
    dominates,
    enumerate_box,
    hall_matching_exists,
    iter_caps_vectors,
    verify_matching,
)


def test_enumerate_examples():
    assert enumerate_box((1, 1), 1) == [(0, 1), (1, 0)]
    assert enumerate_box((2, 2), 3) == [(1, 2), (2, 1)]
    assert enumerate_box((1, 1, 1), 3) == [(1, 1, 1)]
    assert enumerate_box((2, 2), 9) == []
    assert enumerate_box((2, 2), -1) == []


def test_enumerate_rejects_negative_caps():
    with pytest.raises(ValueError):
        enumerate_box((-1, 2), 1)


def test_lexicographic_order():
    for caps in [(2, 3), (1, 2, 1), (3, 0, 2)]:
        for ell in range(sum(caps) + 1):
            elems = enumerate_box(caps, ell)
            assert elems == sorted(elems)


@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.integers(0, 4), min_size=1, max_size=4).map(tuple),
    st.integers(-1, 17),
)
def test_box_size_matches_enumeration(caps, ell):
    assert box_size(caps, ell) == len(enumerate_box(caps, ell))


def test_complement_bijection():
    for caps in [(2, 2), (1, 3, 2), (4, 4, 4)]:
        sigma = sum(caps)
        for ell in range(sigma + 1):
            assert len(enumerate_box(caps, ell)) == len(enumerate_box(caps, sigma - ell))


def test_matching_single_variable_base_case():
    for a in range(5):
        for ell in range(a // 2 + 1):
            m = dominance_matching((a,), ell)
            assert m.assignment == {(ell,): (a - ell,)}


def test_matching_unit_caps_fixes_points():
    m = dominance_matching((1, 1), 1)
    assert m.assignment == {(1, 0): (1, 0), (0, 1): (0, 1)}


def test_matching_traced_values_caps22():
    # One branch rides the merged-coordinate identification, the other the
    # shift into lowered caps; both land on the traced images.
    m = dominance_matching((2, 2), 1)
    assert m.assignment == {(1, 0): (2, 1), (0, 1): (1, 2)}


def test_matching_rejects_degree_above_half():
    with pytest.raises(ValueError):
        dominance_matching((2, 2), 3)


def test_matching_zero_caps_positions():
    m = dominance_matching((0, 3, 0), 1)
    assert set(m.assignment) == {(0, 1, 0)}
    assert m.assignment[(0, 1, 0)] == (0, 2, 0)
    v = verify_matching(m)
    assert v.ok


def test_matching_all_zero_caps():
    m = dominance_matching((0, 0), 0)
    assert m.assignment == {(0, 0): (0, 0)}


def test_verify_matching_detects_violations():
    box1 = Box((1, 1), 1)
    ident = Matching(box1, box1, {(0, 1): (0, 1), (1, 0): (1, 0)})
    assert verify_matching(ident).ok

    src = Box((2, 2), 1)
    tgt = Box((2, 2), 3)
    collide = Matching(src, tgt, {(0, 1): (2, 1), (1, 0): (2, 1)})
    v = verify_matching(collide)
    assert not v.ok and v.reason == "not injective"

    off_box = Matching(src, tgt, {(0, 1): (1, 2), (1, 0): (0, 3)})
    v = verify_matching(off_box)
    assert not v.ok and v.reason == "image outside target box"

    partial = Matching(src, tgt, {(0, 1): (1, 2)})
    v = verify_matching(partial)
    assert not v.ok and v.reason == "not total"

    not_dominating = Matching(box1, box1, {(0, 1): (1, 0), (1, 0): (0, 1)})
    v = verify_matching(not_dominating)
    assert not v.ok and v.reason == "dominance fails"


def test_hall_examples():
    assert hall_matching_exists((1, 1), 1)
    assert not hall_matching_exists((2, 2), 3)
    assert hall_matching_exists((4, 4, 4), 6)
    # Empty source box: vacuous.
    assert hall_matching_exists((2, 2), 7)


def test_construction_and_oracle_agree_small_sweep():
    for caps in iter_caps_vectors(3, 9):
        sigma = sum(caps)
        for ell in range(sigma // 2 + 1):
            m = dominance_matching(caps, ell)
            assert verify_matching(m).ok, (caps, ell)
            assert hall_matching_exists(caps, ell), (caps, ell)
        for ell in range(sigma // 2 + 1, sigma + 1):
            assert not hall_matching_exists(caps, ell), (caps, ell)


@settings(max_examples=250, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4).map(tuple), st.data())
def test_construction_verifies_on_random_caps(caps, data):
    ell = data.draw(st.integers(0, sum(caps) // 2))
    m = dominance_matching(caps, ell)
    v = verify_matching(m)
    assert v.ok, (caps, ell, v)
    assert set(m.assignment) == set(enumerate_box(caps, ell))


def test_capped_specialization_has_matching():
    # Caps (p-1, .., p-1) is the grade pairing situation.
    for n, p in [(2, 3), (3, 2), (2, 5), (3, 3)]:
        caps = (p - 1,) * n
        for ell in range(sum(caps) // 2 + 1):
            m = dominance_matching(caps, ell)
            assert verify_matching(m).ok
            assert len(m.assignment) == len(enumerate_box(caps, ell))


def test_dominates():
    assert dominates((1, 0), (2, 1))
    assert not dominates((1, 2), (2, 1))


def test_iter_caps_vectors_count():
    # Ordered tuples of length <= 2 with sum <= 3: 4 + 10.
    assert sum(1 for _ in iter_caps_vectors(2, 3)) == 14
