"""The virtual character sum over X_W of (2 Ind_<sigma>^W 1 - rho).

Only for groups small enough to enumerate; values are exact integers on the
conjugacy classes of W.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coxgroup import (
    DEFAULT_ORACLE_THRESHOLD,
    GroupElement,
    check_oracle_size,
    element_index,
    element_table,
    inverse_table,
    rows_to_indices,
    simple_reflection,
)
from .errors import ContractError, DomainError
from .involutions import special_class_reps
from .rootsystem import RootSystem


@dataclass(frozen=True)
class ClassData:
    reps: tuple[GroupElement, ...]
    sizes: tuple[int, ...]
    order: int
    rep_rows: tuple[int, ...]  # row of each representative in the element table
    class_of_row: np.ndarray  # class index of every element-table row

    def __len__(self):
        return len(self.reps)


@dataclass(frozen=True)
class VirtualCharacter:
    values: tuple[int, ...]

    def __add__(self, other):
        return VirtualCharacter(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return VirtualCharacter(tuple(a - b for a, b in zip(self.values, other.values)))

    def __rmul__(self, k: int):
        return VirtualCharacter(tuple(k * a for a in self.values))

    @property
    def degree(self) -> int:
        return self.values[0]


def conjugacy_classes(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> ClassData:
    """Orbits of W under conjugation; each representative is the first member in table order."""
    cached = rs._cache.get("class_data")
    if cached is not None:
        return cached
    check_oracle_size(rs, limit, "conjugacy classes")
    P = element_table(rs, limit)
    # conjugation by each simple reflection, as a map on table rows
    conj_maps = []
    for s in range(1, rs.rank + 1):
        g = np.array(simple_reflection(rs, s).perm, dtype=np.int64)
        conj_maps.append(rows_to_indices(rs, g[P[:, g]], limit))  # s x s
    label = np.full(len(P), -1, dtype=np.int64)
    reps, sizes = [], []
    for start in range(len(P)):
        if label[start] >= 0:
            continue
        k = len(reps)
        label[start] = k
        stack, size = [start], 0
        while stack:
            i = stack.pop()
            size += 1
            for cm in conj_maps:
                j = cm[i]
                if label[j] < 0:
                    label[j] = k
                    stack.append(j)
        reps.append(start)
        sizes.append(size)
    if sum(sizes) != len(P):
        raise ContractError("class sizes do not add up to |W|")
    label.setflags(write=False)
    cd = ClassData(
        tuple(GroupElement(tuple(int(x) for x in P[i])) for i in reps),
        tuple(sizes),
        len(P),
        tuple(reps),
        label,
    )
    rs._cache["class_data"] = cd
    return cd


def induced_trivial(rs: RootSystem, cd: ClassData, sigma: GroupElement, limit: int = DEFAULT_ORACLE_THRESHOLD) -> VirtualCharacter:
    """Character of the permutation module on W/<sigma>.

    Value at w: |{x in W : x^-1 w x in <sigma>}| / |<sigma>|.
    """
    if not sigma.is_involution():
        raise DomainError("induced_trivial needs an involution (or the identity)")
    P = element_table(rs, limit)
    Pinv = inverse_table(rs, limit)
    subgroup = [GroupElement(tuple(range(P.shape[1])))]
    if not sigma.is_identity():
        subgroup.append(sigma)
    # x^-1 w x = h  iff  w = x h x^-1: tally x h x^-1 over all x, read off at the reps
    hits = np.zeros(len(P), dtype=np.int64)
    Pinv_l = Pinv.astype(np.int64)
    for h in subgroup:
        ha = np.array(h.perm, dtype=np.int64)
        conj = np.take_along_axis(P, ha[Pinv_l], axis=1)
        rows = rows_to_indices(rs, conj, limit)
        hits += np.bincount(rows, minlength=len(P))
    values = []
    for i in cd.rep_rows:
        count = int(hits[i])
        if count % len(subgroup):
            raise ContractError("induced character value is not an integer")
        values.append(count // len(subgroup))
    return VirtualCharacter(tuple(values))


def regular_character(cd: ClassData) -> VirtualCharacter:
    return VirtualCharacter((cd.order,) + (0,) * (len(cd) - 1))


def trivial_character(cd: ClassData) -> VirtualCharacter:
    return VirtualCharacter((1,) * len(cd))


def fv_character(rs: RootSystem, twisted: bool = False, limit: int = DEFAULT_ORACLE_THRESHOLD) -> VirtualCharacter:
    """Sum over special class representatives (only even ones if twisted) of 2 Ind 1 - rho."""
    cd = conjugacy_classes(rs, limit)
    rho = regular_character(cd)
    chi = VirtualCharacter((0,) * len(cd))
    for c in special_class_reps(rs):
        if twisted and not c.even:
            continue
        chi = chi + (2 * induced_trivial(rs, cd, c.wJ, limit) - rho)
    return chi


def inner_product(cd: ClassData, chi1: VirtualCharacter, chi2: VirtualCharacter) -> Fraction:
    if len(chi1.values) != len(cd) or len(chi2.values) != len(cd):
        raise DomainError("characters do not match the class data")
    total = sum(n * a * b for n, a, b in zip(cd.sizes, chi1.values, chi2.values))
    return Fraction(total, cd.order)


def class_of_element(cd: ClassData, rs: RootSystem, w: GroupElement) -> int:
    return int(cd.class_of_row[element_index(rs, w)])
