"""Quantified properties over every admissible type of rank <= 8 and every I2(m), m <= 30."""

from __future__ import annotations

import pytest

from coxspecial.coxgroup import subset_classes
from coxspecial.involutions import involution_classes, lemma_hypothesis
from coxspecial.normalizers import bulky_brute, bulky_fast, centrality_consistency, special_is_class_function
from coxspecial.rootsystem import CoxeterType, build

ALL_TYPES = (
    [CoxeterType("A", n) for n in range(1, 9)]
    + [CoxeterType(f, n) for f in "BC" for n in range(2, 9)]
    + [CoxeterType("D", n) for n in range(4, 9)]
    + [CoxeterType("E", n) for n in (6, 7, 8)]
    + [CoxeterType("F", 4), CoxeterType("H", 3), CoxeterType("H", 4)]
    + [CoxeterType("I2", 2, m) for m in range(3, 31)]
)
DIHEDRAL = [t for t in ALL_TYPES if t.family == "I2"]


@pytest.mark.parametrize("ct", ALL_TYPES, ids=str)
def test_centrality_predicates_agree(ct):
    assert centrality_consistency(build(ct)) == []


@pytest.mark.parametrize("ct", ALL_TYPES, ids=str)
def test_one_dimensional_eigenspace_implies_special(ct):
    for c in involution_classes(build(ct)):
        if lemma_hypothesis(c):
            assert c.special, c.J


@pytest.mark.parametrize("ct", [t for t in ALL_TYPES if t.family in "ABCDEFH" and t.rank == 8], ids=str)
def test_rank_eight_special_equals_bulky(ct):
    R = build(ct)
    for c in involution_classes(R):
        assert c.special == bulky_fast(R, c.J).bulky, c.J


@pytest.mark.parametrize("ct", DIHEDRAL, ids=str)
def test_dihedral_fast_equals_brute(ct):
    R = build(ct)
    for cls in subset_classes(R):
        assert bulky_fast(R, cls[0]).bulky == bulky_brute(R, cls[0]).bulky


@pytest.mark.parametrize("ct", DIHEDRAL, ids=str)
def test_dihedral_special_is_class_function(ct):
    assert special_is_class_function(build(ct), samples=100, seed=1)
