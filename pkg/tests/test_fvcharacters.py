from __future__ import annotations

from fractions import Fraction

import pytest

from coxspecial.coxgroup import enumerate_group, longest_element
from coxspecial.errors import SizeExceededError
from coxspecial.fvcharacters import (
    class_of_element,
    conjugacy_classes,
    fv_character,
    induced_trivial,
    inner_product,
    trivial_character,
)
from coxspecial.involutions import special_class_reps


def _induced_oracle(R, sigma):
    """Pure-python value of Ind_<sigma>^W 1 at each class representative."""
    W = enumerate_group(R)
    cd = conjugacy_classes(R)
    H = {sigma, sigma * sigma}
    return tuple(sum(1 for x in W if x.inverse() * w * x in H) // len(H) for w in cd.reps)


def test_a1_a2_values(rs):
    assert fv_character(rs("A1")).values == (2, 2)
    assert fv_character(rs("A2")).values == (6, 2, 0)
    assert fv_character(rs("A2"), twisted=True).values == (6, 0, 0)
    assert conjugacy_classes(rs("A2")).sizes == (1, 3, 2)
    assert len(conjugacy_classes(rs("C2"))) == 5


def test_induced_example(rs):
    R = rs("A2")
    cd = conjugacy_classes(R)
    assert induced_trivial(R, cd, longest_element(R, (1,))).values == (3, 1, 0)


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(7)"])
def test_induced_matches_oracle(rs, name):
    R = rs(name)
    cd = conjugacy_classes(R)
    for c in special_class_reps(R):
        assert induced_trivial(R, cd, c.wJ).values == _induced_oracle(R, c.wJ)


def test_inner_products(rs):
    R = rs("A1")
    cd = conjugacy_classes(R)
    chi = fv_character(R)
    assert inner_product(cd, chi, chi) == 4
    R2 = rs("A2")
    cd2 = conjugacy_classes(R2)
    assert inner_product(cd2, fv_character(R2), trivial_character(cd2)) == Fraction(2)


@pytest.mark.parametrize("name", ["A4", "B4", "D4", "F4", "H3", "I2(8)"])
def test_reciprocity(rs, name):
    R = rs(name)
    cd = conjugacy_classes(R)
    one = trivial_character(cd)
    sp = special_class_reps(R)
    assert fv_character(R).degree == R.order
    assert inner_product(cd, fv_character(R), one) == len(sp)
    assert inner_product(cd, fv_character(R, True), one) == sum(c.even for c in sp)
    assert sum(cd.sizes) == R.order


def test_class_lookup(rs):
    R = rs("B3")
    cd = conjugacy_classes(R)
    for i, w in enumerate(cd.reps):
        assert class_of_element(cd, R, w) == i


def test_size_guard(rs):
    with pytest.raises(SizeExceededError):
        fv_character(rs("E7"))
