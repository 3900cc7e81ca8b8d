from __future__ import annotations

from fractions import Fraction

import pytest

from coxspecial.errors import DomainError
from coxspecial.exactfield import rank
from coxspecial.rootsystem import (
    CoxeterType,
    classify_components,
    format_components,
    group_order,
    longest_is_minus_one,
    parse_type,
    reflect,
)

# number of positive roots and |W|
COUNTS = {
    "A1": (1, 2), "A3": (6, 24), "A7": (28, 40320),
    "B2": (4, 8), "B5": (25, 3840), "C4": (16, 384),
    "D4": (12, 192), "D8": (56, 5160960),
    "E6": (36, 51840), "E7": (63, 2903040), "E8": (120, 696729600),
    "F4": (24, 1152), "H3": (15, 120), "H4": (60, 14400),
    "I2(5)": (5, 10), "I2(12)": (12, 24),
}


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_counts(rs, name):
    R = rs(name)
    npos, order = COUNTS[name]
    assert len(R.positive) == npos
    assert len(R.roots) == 2 * npos
    assert R.order == order == group_order(R.ctype)


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_closure_and_gram(rs, name):
    R = rs(name)
    roots = set(R.roots)
    for i in range(len(R.roots)):
        for s in range(R.rank):
            assert reflect(R, R.roots[i], s) in roots
        assert R.roots[R.neg[i]] == tuple(-x for x in R.roots[i])
    # leading principal minors of the Gram matrix are positive
    n = R.rank
    for k in range(1, n + 1):
        sub = [list(row[:k]) for row in R.gram[:k]]
        det = R.field.one()
        for c in range(k):
            p = next(r for r in range(c, k) if sub[r][c] != 0)
            if p != c:
                sub[c], sub[p] = sub[p], sub[c]
                det = -det
            det = det * sub[c][c]
            for r in range(c + 1, k):
                f = sub[r][c] / sub[c][c]
                sub[r] = [a - f * b for a, b in zip(sub[r], sub[c])]
        assert det > 0
    assert rank(R.gram) == n


def test_reflection_example_c3(rs):
    R = rs("C3")
    # reflect 2e3 in e2 - e3 -> 2e2
    v = R.from_ambient([0, 0, 2])
    r = R.index[R.from_ambient([0, 1, -1])]
    assert R.to_ambient(reflect(R, v, r)) == (0, 2, 0)


def test_e8_simple_roots(rs):
    R = rs("E8")
    h = Fraction(1, 2)
    assert R.to_ambient(R.roots[0]) == (h, -h, -h, -h, -h, -h, -h, h)
    assert R.to_ambient(R.roots[1]) == (1, 1, 0, 0, 0, 0, 0, 0)
    assert R.to_ambient(R.roots[2]) == (-1, 1, 0, 0, 0, 0, 0, 0)


def test_parse_type():
    assert parse_type("i2(7)") == CoxeterType("I2", 2, 7)
    assert str(parse_type("e6")) == "E6"
    for bad in ("D3", "E9", "H5", "I2(2)", "F5", "X1", "B1"):
        with pytest.raises(DomainError):
            parse_type(bad)


@pytest.mark.parametrize(
    "name, J, expected",
    [
        ("D5", (2, 3, 4, 5), "D4"),
        ("D5", (1, 4, 5), "A1^3"),
        ("E8", tuple(range(1, 8)), "E7"),
        ("E8", (2, 3, 4, 5), "D4"),
        ("B4", (1, 3, 4), "B2 x A1"),
        ("C4", (1, 3, 4), "C2 x A1"),
        ("F4", (1, 2), "A2"),
        ("F4", (2, 3), "B2"),
        ("H4", (1, 2, 3), "H3"),
        ("H4", (1, 2), "I2(5)"),
        ("I2(6)", (1, 2), "I2(6)"),
        ("A3", (), "1"),
    ],
)
def test_classify(rs, name, J, expected):
    assert format_components(classify_components(rs(name), J)) == expected


def test_longest_minus_one_table():
    yes = ["A1", "B3", "C5", "D4", "D6", "E7", "E8", "F4", "H3", "H4", "I2(8)"]
    no = ["A2", "A5", "D5", "D7", "E6", "I2(5)", "I2(9)"]
    assert all(longest_is_minus_one(parse_type(t)) for t in yes)
    assert not any(longest_is_minus_one(parse_type(t)) for t in no)
