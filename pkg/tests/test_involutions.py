from __future__ import annotations

import numpy as np
import pytest

from coxspecial.coxgroup import element_table, from_word, longest_element
from coxspecial.errors import ContractError
from coxspecial.involutions import (
    eigenspaces,
    involution_classes,
    is_special,
    is_special_reference,
    project,
    special_class_reps,
    verify_involution_classes,
)
from coxspecial.rootsystem import format_components


def _float_special(R, w) -> bool:
    """Floating-point oracle in ambient coordinates: rank test on [proj, root] pairs."""
    A = np.array([[float(x) for x in R.to_ambient(v)] for v in R.roots])
    M = np.array([[float(x) for x in R.to_ambient(R.roots[j])] for j in w.perm])  # w(root_i)
    phi = {1: [i for i, j in enumerate(w.perm) if i == j], -1: [i for i, j in enumerate(w.perm) if j == R.neg[i]]}
    for a in range(len(A)):
        ok = False
        for eps in (1, -1):
            if not phi[eps]:
                continue
            p = (A[a] + eps * M[a]) / 2
            if np.linalg.norm(p) < 1e-9:
                ok = True
                break
            if any(np.linalg.matrix_rank(np.vstack([p, A[b]]), tol=1e-9) == 1 for b in phi[eps]):
                ok = True
                break
        if not ok:
            return False
    return True


def test_worked_example_d5(rs):
    R = rs("D5")
    w = longest_element(R, (2, 3, 4, 5))
    e = eigenspaces(R, w)
    assert e.dim1 == 1 and e.dimM1 == 4
    assert e.phi1 == frozenset()
    a = R.from_ambient([1, -1, 0, 0, 0])
    assert R.to_ambient(project(R, w, a, -1)) == (0, -1, 0, 0, 0)
    assert R.to_ambient(project(R, w, a, 1)) == (1, 0, 0, 0, 0)
    assert not is_special(R, w)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("A1", ["1", "A1"]),
        ("A2", ["1", "A1"]),
        ("A5", ["1", "A1"]),
        ("D4", ["1", "A1", "A1^3", "D4"]),
        ("E6", ["1", "A1"]),
        ("E8", ["1", "A1", "E7", "E8"]),
        ("H3", ["1", "A1", "A1^2", "H3"]),
        ("I2(5)", ["1", "A1"]),
    ],
)
def test_special_classes(rs, name, expected):
    got = [format_components(c.components) for c in special_class_reps(rs(name))]
    assert got == expected


def test_a3_two_commuting_reflections_not_special(rs):
    R = rs("A3")
    assert not is_special(R, longest_element(R, (1, 3)))


@pytest.mark.parametrize("name", ["A4", "B3", "C4", "D4", "D5", "F4", "E6"])
def test_special_matches_float_oracle(rs, name):
    R = rs(name)
    for c in involution_classes(R):
        assert c.special == _float_special(R, c.wJ), c.J


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "H3", "I2(8)", "I2(7)"])
def test_special_matches_reference(rs, name):
    R = rs(name)
    for c in involution_classes(R):
        assert is_special(R, c.wJ) == is_special_reference(R, c.wJ)


@pytest.mark.parametrize("name", ["A3", "B4", "D5", "H3", "F4", "I2(10)"])
def test_zero_projection_convention_is_immaterial(rs, name):
    """No root of a class representative has both projections zero, so the convention never fires."""
    R = rs(name)
    for c in involution_classes(R):
        for v in R.roots:
            assert any(any(x != 0 for x in project(R, c.wJ, v, e)) for e in (1, -1))


@pytest.mark.parametrize("name", ["B3", "H3", "D4"])
def test_projection_decomposes(rs, name):
    R = rs(name)
    for c in involution_classes(R):
        for v in R.roots[:10]:
            p, q = project(R, c.wJ, v, 1), project(R, c.wJ, v, -1)
            assert tuple(a + b for a, b in zip(p, q)) == v


@pytest.mark.parametrize("name", ["A5", "B4", "D5", "F4", "H3", "H4", "I2(12)"])
def test_classes_exhaustive(rs, name):
    R = rs(name)
    out = verify_involution_classes(R)
    assert out["ok"]
    P = element_table(R)
    n_inv = sum(1 for row in P if all(row[row[i]] == i for i in range(len(row))))  # identity included
    assert out["involutions"] == n_inv


def test_non_involution_rejected(rs):
    R = rs("A2")
    with pytest.raises((ContractError, ValueError)):
        is_special(R, from_word(R, [1, 2]))
