from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxspecial.errors import DomainError, InvalidOperandError
from coxspecial.exactfield import (
    FieldSpec,
    Scalar,
    direction_key,
    kernel,
    minpoly_2cos,
    proportional,
    rank,
    solve,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def elements(F: FieldSpec):
    return st.lists(small, min_size=F.degree, max_size=F.degree).map(lambda cs: Scalar(F, tuple(cs)))


FIELDS = [FieldSpec.rational(), minpoly_2cos(5), minpoly_2cos(7), minpoly_2cos(8), minpoly_2cos(12)]


@pytest.mark.parametrize("m", range(3, 31))
def test_minpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / m), x), x)
    got = minpoly_2cos(m)
    want = [Fraction(int(c)) for c in reversed(expected.all_coeffs())]
    assert list(got.minpoly) == want
    assert abs(got.approx() - 2 * float(sympy.cos(sympy.pi / m))) < 1e-12


def test_small_fields():
    assert minpoly_2cos(3).degree == 1
    assert minpoly_2cos(5).minpoly == (-1, -1, 1)
    assert minpoly_2cos(4).minpoly == (-2, 0, 1)
    assert minpoly_2cos(5).kind == "quadratic-sqrt5"
    with pytest.raises(DomainError):
        minpoly_2cos(2)


def test_golden_ratio_identities():
    F = minpoly_2cos(5)
    g = F.gen
    assert g * g == g + 1
    assert g.inverse() == g - 1
    assert str(g * g) == "1 + g"
    assert g > 1 and g < 2 and -g < 0


def test_sign_of_close_values():
    # 2cos(pi/12) = (sqrt6 + sqrt2)/2 ~ 1.9318516; compare against a nearby rational
    F = minpoly_2cos(12)
    g = F.gen
    assert (g - Fraction(19318516, 10**7)).sign() == 1
    assert (g - Fraction(19318517, 10**7)).sign() == -1


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.describe()[:12])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero()
    assert hash(a + 0) == hash(a)
    if a != 0:
        assert a * a.inverse() == F.one()
        assert (b / a) * a == b
    assert (a - b).sign() == -(b - a).sign()
    assert abs(float(a * b) - float(a) * float(b)) < 1e-6 * (1 + abs(float(a) * float(b)))


@settings(max_examples=60, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=50), st.fractions(min_value=-5, max_value=5, max_denominator=50))
def test_sign_agrees_with_float(p, q):
    F = minpoly_2cos(7)
    x = F.gen * p + q
    fx = float(x)
    if abs(fx) > 1e-9:
        assert x.sign() == (1 if fx > 0 else -1)


def test_division_by_zero():
    F = minpoly_2cos(5)
    with pytest.raises(InvalidOperandError):
        F.zero().inverse()
    with pytest.raises(ArithmeticError):
        F.one() / 0


def test_mixed_fields_rejected():
    with pytest.raises(InvalidOperandError):
        minpoly_2cos(5).gen + minpoly_2cos(7).gen


def test_kernel_and_rank():
    F = FieldSpec.rational()
    M = tuple(tuple(F(x) for x in row) for row in [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(M) == 2
    (k,) = kernel(M)
    for row in M:
        assert sum((a * b for a, b in zip(row, k)), F.zero()) == 0
    assert solve(M, (F(6), F(12), F(2))) is not None
    assert solve(M, (F(1), F(0), F(0))) is None


def test_proportional_over_extension():
    F = minpoly_2cos(5)
    g = F.gen
    u = (F.one(), g)
    v = (g, g * g)
    assert proportional(u, v)
    assert direction_key(u) == direction_key(v)
    assert not proportional(u, (F.one(), F.one()))
    assert direction_key((F.zero(), F.zero())) is None
