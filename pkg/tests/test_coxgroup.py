from __future__ import annotations

import pytest

from coxspecial.coxgroup import (
    canonical_rep,
    class_of,
    conjugate_subset,
    element_table,
    enumerate_group,
    from_word,
    identity,
    in_parabolic,
    is_central_by_type,
    is_central_longest,
    length,
    longest_element,
    reduced_word,
    simple_reflection,
    subset_classes,
    subset_classes_brute,
)
from coxspecial.errors import DomainError, SizeExceededError


def test_words_and_lengths(rs):
    R = rs("A2")
    s1 = simple_reflection(R, 1)
    assert (s1 * s1).is_identity()
    assert from_word(R, [1, 2, 1]) == from_word(R, [2, 1, 2])
    assert length(R, from_word(R, [1, 2, 1, 2])) == 2
    assert longest_element(R, (1, 2)) == from_word(R, [1, 2, 1])
    assert length(R, identity(R)) == 0
    w = from_word(R, [2, 1])
    assert from_word(R, reduced_word(R, w)) == w
    assert w.inverse() * w == identity(R)
    with pytest.raises(DomainError):
        simple_reflection(R, 3)


@pytest.mark.parametrize("name", ["A4", "B3", "D5", "E6", "F4", "H3", "I2(7)"])
def test_longest_length(rs, name):
    R = rs(name)
    w0 = longest_element(R, range(1, R.rank + 1))
    assert length(R, w0) == len(R.positive)
    assert w0.is_involution()


@pytest.mark.parametrize(
    "name, expected",
    [("A2", 6), ("B2", 8), ("C2", 8), ("H3", 120), ("F4", 1152), ("I2(9)", 18), ("D4", 192)],
)
def test_enumerate_sizes(rs, name, expected):
    R = rs(name)
    assert len(enumerate_group(R)) == expected
    assert len(set(enumerate_group(R))) == expected


def test_size_guard(rs):
    with pytest.raises(SizeExceededError):
        element_table(rs("E7"))
    with pytest.raises(SizeExceededError):
        element_table(rs("A5"), limit=100)


def test_conjugate_subset(rs):
    R = rs("A2")
    assert conjugate_subset(R, (1,), from_word(R, [1, 2])) == (2,)
    assert conjugate_subset(R, (1,), from_word(R, [2, 1])) is None
    C = rs("C2")
    assert conjugate_subset(C, (1,), longest_element(C, (1, 2))) == (1,)
    # s1 sends alpha_2 to a non-simple root
    assert conjugate_subset(R, (2,), simple_reflection(R, 1)) is None


def test_in_parabolic(rs):
    R = rs("A3")
    assert in_parabolic(R, from_word(R, [1, 2, 1]), (1, 2))
    assert not in_parabolic(R, from_word(R, [1, 3, 2]), (1, 3))
    assert in_parabolic(R, identity(R), ())


@pytest.mark.parametrize("name", ["A4", "B4", "C3", "D4", "D5", "F4", "H3", "I2(6)", "I2(7)"])
def test_subset_classes_match_brute_orbits(rs, name):
    R = rs(name)
    assert subset_classes(R) == subset_classes_brute(R)


def test_subset_class_examples(rs):
    R = rs("A3")
    assert class_of(R, (3,)) == [(1,), (2,), (3,)]
    assert canonical_rep(R, (2, 3)) == (1, 2)
    D = rs("D4")
    assert class_of(D, (4,)) == [(1,), (2,), (3,), (4,)]
    assert len(subset_classes(D)) == 11


def test_centrality(rs):
    R = rs("D5")
    for J, expected in [((2, 3, 4, 5), True), ((1, 2, 3, 4, 5), False), ((1, 2), False), ((1, 3), True)]:
        assert is_central_longest(R, J) is expected
        assert is_central_by_type(R, J) is expected
