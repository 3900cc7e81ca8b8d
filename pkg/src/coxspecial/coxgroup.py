"""Group elements as permutations of the root set.

An element w is stored as the tuple ``perm`` with ``perm[i]`` the index of
w(roots[i]).  Products compose as maps: ``(x * y)(a) = x(y(a))``.  Subsets J of
the simple reflections are 1-based label tuples, sorted.

Brute-force paths (enumeration, oracles) work on a numpy table with one row per
element; everything else only ever touches a handful of permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, SizeExceededError
from .exactfield import Matrix, Vector
from .rootsystem import RootSystem, classify_components, has_central_longest

DEFAULT_ORACLE_THRESHOLD = 60_000


@dataclass(frozen=True)
class GroupElement:
    perm: tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        p = self.perm
        return GroupElement(tuple(p[i] for i in other.perm))

    def __call__(self, root_idx: int) -> int:
        return self.perm[root_idx]

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return GroupElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def is_involution(self) -> bool:
        p = self.perm
        return all(p[p[i]] == i for i in range(len(p)))


def identity(rs: RootSystem) -> GroupElement:
    return GroupElement(tuple(range(len(rs.roots))))


def _check_labels(rs: RootSystem, labels: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(labels)))
    for s in out:
        if not 1 <= s <= rs.rank:
            raise DomainError(f"simple label {s} out of range 1..{rs.rank}")
    return out


def simple_reflection(rs: RootSystem, s: int) -> GroupElement:
    gens = rs._cache.get("gens")
    if gens is None:
        gens = []
        for i in range(rs.rank):
            perm = []
            for v in rs.roots:
                c = 2 * rs.form(v, rs.roots[i]) / rs.gram[i][i]
                if c:
                    w = list(v)
                    w[i] = v[i] - c
                    perm.append(rs.index[tuple(w)])
                else:
                    perm.append(rs.index[v])
            gens.append(GroupElement(tuple(perm)))
        rs._cache["gens"] = gens
    if not 1 <= s <= rs.rank:
        raise DomainError(f"simple label {s} out of range 1..{rs.rank}")
    return gens[s - 1]


def from_word(rs: RootSystem, word: Sequence[int]) -> GroupElement:
    """The product s_{w[0]} s_{w[1]} ... of simple reflections."""
    w = identity(rs)
    for s in word:
        w = w * simple_reflection(rs, s)
    return w


def length(rs: RootSystem, w: GroupElement) -> int:
    pos = rs.positive
    return sum(1 for i in pos if w.perm[i] not in pos)


def reduced_word(rs: RootSystem, w: GroupElement) -> list[int]:
    """A reduced word for w, peeling right descents with the smallest label first."""
    word: list[int] = []
    pos = rs.positive
    while True:
        s = next((s for s in range(1, rs.rank + 1) if w.perm[s - 1] not in pos), None)
        if s is None:
            return word[::-1]
        word.append(s)
        w = w * simple_reflection(rs, s)


def longest_element(rs: RootSystem, J: Iterable[int]) -> GroupElement:
    """w_J by greedy ascent: append the smallest s in J with l(ws) > l(w)."""
    J = _check_labels(rs, J)
    cache = rs._cache.setdefault("longest", {})
    if J in cache:
        return cache[J]
    w = identity(rs)
    pos = rs.positive
    while True:
        s = next((s for s in J if w.perm[s - 1] in pos), None)
        if s is None:
            break
        w = w * simple_reflection(rs, s)
    cache[J] = w
    return w


def is_central_longest(rs: RootSystem, J: Iterable[int]) -> bool:
    """Whether w_J acts as -1 on the simple roots of J, i.e. is central in W_J."""
    J = _check_labels(rs, J)
    w = longest_element(rs, J)
    return all(w.perm[s - 1] == rs.neg[s - 1] for s in J)


def is_central_by_type(rs: RootSystem, J: Iterable[int]) -> bool:
    return has_central_longest(classify_components(rs, J))


def conjugate_subset(rs: RootSystem, J: Iterable[int], w: GroupElement) -> tuple[int, ...] | None:
    """K with w J w^-1 = K when every w s w^-1 (s in J) is simple, else None.

    w s_a w^-1 is the reflection in w(a), which is simple iff w(a) = +-a_k.
    """
    K = []
    r = rs.rank
    for s in _check_labels(rs, J):
        img = w.perm[s - 1]
        if img < r:
            K.append(img + 1)
        elif rs.neg[img] < r:
            K.append(rs.neg[img] + 1)
        else:
            return None
    return tuple(sorted(K))


def in_parabolic(rs: RootSystem, w: GroupElement, J: Iterable[int]) -> bool:
    """Greedy J-descent: strip right descents from J; True iff the identity is reached."""
    J = _check_labels(rs, J)
    pos = rs.positive
    while True:
        s = next((s for s in J if w.perm[s - 1] not in pos), None)
        if s is None:
            return w.is_identity()
        w = w * simple_reflection(rs, s)


def matrix(rs: RootSystem, w: GroupElement) -> Matrix:
    """Matrix of w on simple-root coordinates; column i holds w(alpha_i)."""
    cols = [rs.roots[w.perm[i]] for i in range(rs.rank)]
    return tuple(tuple(cols[j][i] for j in range(rs.rank)) for i in range(rs.rank))


def act(rs: RootSystem, w: GroupElement, v: Vector) -> Vector:
    """w(v) for an arbitrary vector in simple-root coordinates."""
    out = [rs.field.zero()] * rs.rank
    for i, c in enumerate(v):
        if c:
            img = rs.roots[w.perm[i]]
            for k in range(rs.rank):
                if img[k]:
                    out[k] = out[k] + c * img[k]
    return tuple(out)


# ---------------------------------------------------------------------------
# subsets and their conjugacy classes
# ---------------------------------------------------------------------------

def all_subsets(rs: RootSystem) -> list[tuple[int, ...]]:
    labels = range(1, rs.rank + 1)
    return [J for k in range(rs.rank + 1) for J in combinations(labels, k)]


def elementary_move(rs: RootSystem, J: tuple[int, ...], s: int) -> tuple[int, ...]:
    """The image of J under conjugation by w_K, K = J + {s}; again a subset of K."""
    K = tuple(sorted(set(J) | {s}))
    wK = longest_element(rs, K)
    # w_K sends each simple root of K to minus a simple root of K
    return tuple(sorted(rs.neg[wK.perm[t - 1]] + 1 for t in J))


def subset_classes(rs: RootSystem) -> list[list[tuple[int, ...]]]:
    """Partition of all J subsets of S into W-conjugacy classes.

    Classes are the connected components of the elementary-move graph.  Each
    class is sorted, its first member is the lexicographically least subset and
    serves as the canonical representative; classes are ordered by (|J|, rep).
    """
    cached = rs._cache.get("subset_classes")
    if cached is not None:
        return cached
    subsets = all_subsets(rs)
    parent = {J: J for J in subsets}

    def find(J):
        while parent[J] != J:
            parent[J] = parent[parent[J]]
            J = parent[J]
        return J

    for J in subsets:
        for s in range(1, rs.rank + 1):
            if s in J:
                continue
            L = elementary_move(rs, J, s)
            a, b = find(J), find(L)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for J in subsets:
        groups.setdefault(find(J), []).append(J)
    classes = sorted((sorted(g) for g in groups.values()), key=lambda c: (len(c[0]), c[0]))
    rs._cache["subset_classes"] = classes
    return classes


def class_of(rs: RootSystem, J: Iterable[int]) -> list[tuple[int, ...]]:
    J = _check_labels(rs, J)
    for c in subset_classes(rs):
        if J in c:
            return c
    raise AssertionError("subset missing from its own partition")


def canonical_rep(rs: RootSystem, J: Iterable[int]) -> tuple[int, ...]:
    return class_of(rs, J)[0]


# ---------------------------------------------------------------------------
# brute-force enumeration
# ---------------------------------------------------------------------------

def check_oracle_size(rs: RootSystem, limit: int, what: str) -> None:
    if rs.order > limit:
        raise SizeExceededError(what, limit, rs.order)


def element_table(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> np.ndarray:
    """All elements of W as rows of root permutations, in breadth-first order.

    Row 0 is the identity; rows are added level by level (by length), each level
    in the order found by left multiplication with s_1, ..., s_n.
    """
    table = rs._cache.get("table")
    if table is not None:
        if len(table) > limit:
            raise SizeExceededError("element table", limit, len(table))
        return table
    check_oracle_size(rs, limit, "element table")
    nroots = len(rs.roots)
    dtype = np.int16 if nroots < 2**15 else np.int32
    gens = [np.array(simple_reflection(rs, s).perm, dtype=dtype) for s in range(1, rs.rank + 1)]
    ident = np.arange(nroots, dtype=dtype)
    seen = {ident.tobytes()}
    rows = [ident]
    frontier = ident[None, :]
    while len(frontier):
        new = []
        for g in gens:
            cand = g[frontier]  # s o x for each x in the frontier
            for row in cand:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    new.append(row)
        if len(rows) + len(new) > limit:
            raise SizeExceededError("element table", limit)
        rows.extend(new)
        frontier = np.array(new, dtype=dtype) if new else np.empty((0, nroots), dtype=dtype)
    table = np.array(rows, dtype=dtype)
    table.setflags(write=False)
    rs._cache["table"] = table
    return table


def inverse_table(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> np.ndarray:
    inv = rs._cache.get("inv_table")
    if inv is None:
        P = element_table(rs, limit)
        inv = np.argsort(P, axis=1).astype(P.dtype)
        inv.setflags(write=False)
        rs._cache["inv_table"] = inv
    return inv


def enumerate_group(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> list[GroupElement]:
    """All elements of W (breadth-first from the simple reflections)."""
    return [GroupElement(tuple(int(i) for i in row)) for row in element_table(rs, limit)]


def _simple_image_table(rs: RootSystem, P: np.ndarray) -> np.ndarray:
    """img[x, s-1] = k-1 when x(alpha_s) = +-alpha_k, else -1."""
    r = rs.rank
    neg = np.array(rs.neg)
    imgs = P[:, :r].astype(np.int64)
    direct = np.where(imgs < r, imgs, -1)
    negated = neg[imgs]
    return np.where(direct >= 0, direct, np.where(negated < r, negated, -1))


def subset_classes_brute(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> list[list[tuple[int, ...]]]:
    """Subset classes as orbits under conjugation by every element of W (oracle)."""
    P = element_table(rs, limit)
    img = _simple_image_table(rs, P)
    orbit_of: dict = {}
    classes = []
    for J in all_subsets(rs):
        if J in orbit_of:
            continue
        if not J:
            orbit = {()}
        else:
            cols = img[:, [s - 1 for s in J]]
            ok = np.all(cols >= 0, axis=1)
            orbit = {tuple(sorted(int(k) + 1 for k in row)) for row in np.unique(cols[ok], axis=0)}
        for K in orbit:
            orbit_of[K] = orbit
        classes.append(sorted(orbit))
    return sorted(classes, key=lambda c: (len(c[0]), c[0]))


def element_codes(rs: RootSystem, rows: np.ndarray) -> np.ndarray:
    """One int64 per row, built from the images of the simple roots.

    An element is determined by where it sends the simple roots, so equal codes
    mean equal elements.
    """
    bits = max(1, (len(rs.roots) - 1).bit_length())
    if bits * rs.rank > 63:
        raise SizeExceededError("element codes", 2**63)
    codes = np.zeros(len(rows), dtype=np.int64)
    for i in range(rs.rank):
        codes = (codes << bits) | rows[:, i].astype(np.int64)
    return codes


def code_lookup(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD):
    """(sorted codes, row numbers in that order) for the element table."""
    lk = rs._cache.get("code_lookup")
    if lk is None:
        codes = element_codes(rs, element_table(rs, limit))
        order = np.argsort(codes)
        lk = (codes[order], order)
        rs._cache["code_lookup"] = lk
    return lk


def rows_to_indices(rs: RootSystem, rows: np.ndarray, limit: int = DEFAULT_ORACLE_THRESHOLD) -> np.ndarray:
    """Table row numbers of the given permutation rows."""
    sorted_codes, order = code_lookup(rs, limit)
    return order[np.searchsorted(sorted_codes, element_codes(rs, rows))]


def table_index(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> dict:
    """Map from the bytes of a table row to its row number."""
    idx = rs._cache.get("table_index")
    if idx is None:
        idx = {row.tobytes(): i for i, row in enumerate(element_table(rs, limit))}
        rs._cache["table_index"] = idx
    return idx


def element_index(rs: RootSystem, w: GroupElement, limit: int = DEFAULT_ORACLE_THRESHOLD) -> int:
    P = element_table(rs, limit)
    return table_index(rs, limit)[np.array(w.perm, dtype=P.dtype).tobytes()]
