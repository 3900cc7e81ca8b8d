from __future__ import annotations

import pytest

from coxspecial.coxgroup import subset_classes
from coxspecial.errors import SizeExceededError
from coxspecial.normalizers import (
    bulky_brute,
    bulky_fast,
    check_remark,
    classify_bulky_all,
    coset_reps_DJ,
    verify_prop2,
    verify_theorem1,
)


def test_coset_reps(rs):
    assert len(coset_reps_DJ(rs("A2"), (1,))) == 2  # double cosets of W_J
    assert len(coset_reps_DJ(rs("A2"), ())) == 6
    assert len(coset_reps_DJ(rs("B2"), (1, 2))) == 1


def test_d5_worked_example(rs):
    R = rs("D5")
    rep = bulky_fast(R, (2, 3, 4, 5))
    assert rep.bulky is False and rep.central
    w = rep.witness
    assert w.K == (1, 2, 3, 4, 5) and w.L == (2, 3, 4, 5)
    assert (w.t, w.image) == (4, 5)
    brute = bulky_brute(R, (2, 3, 4, 5))
    assert brute.bulky is False
    assert brute.n_J == 2


@pytest.mark.parametrize(
    "name, J, expected",
    [("A2", (1, 2), True), ("A2", (1,), True), ("A3", (1, 3), False), ("B2", (1,), True), ("D4", (1, 2), False)],
)
def test_examples_fast_and_brute(rs, name, J, expected):
    R = rs(name)
    assert bulky_fast(R, J).bulky is expected
    assert bulky_brute(R, J).bulky is expected


def test_loop_only_test_misses_noncentral_a2_in_d4(rs):
    rep = bulky_fast(rs("D4"), (1, 2))
    assert rep.loop_bulky is True
    assert rep.bulky is False
    assert rep.witness.kind == "cycle"


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "D5", "F4", "H3", "I2(8)", "I2(9)"])
def test_fast_equals_brute(rs, name):
    R = rs(name)
    for cls in subset_classes(R):
        assert bulky_fast(R, cls[0]).bulky == bulky_brute(R, cls[0]).bulky, cls[0]


@pytest.mark.parametrize("name", ["A4", "B4", "D5", "F4", "H3"])
def test_centralizer_equals_normalizer(rs, name):
    assert all(r.equal for r in verify_prop2(rs(name)))


@pytest.mark.parametrize("name", ["A5", "C5", "D6", "E7", "E8", "H4"])
def test_theorem(rs, name):
    assert verify_theorem1(rs(name)).ok


def test_remark(rs):
    assert check_remark(rs("A2")).bulky_noncentral == [(1, 2)]
    assert check_remark(rs("B3")).bulky_noncentral == []
    assert check_remark(rs("D5")).ok


def test_classify_rows(rs):
    rows = classify_bulky_all(rs("B2"))
    assert [r.J for r in rows] == [(), (1,), (2,), (1, 2)]
    assert sum(r.size for r in rows) == 4


def test_brute_size_guard(rs):
    with pytest.raises(SizeExceededError):
        bulky_brute(rs("E7"), (1,))
