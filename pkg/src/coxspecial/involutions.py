"""Involution classes, eigenspace data and the special-involution test.

Every involution of W is conjugate to some w_J with w_J central in W_J, so the
classes are indexed by the subset classes of such J.  An involution is special
when each root has a projection onto V_1 or V_-1 that is proportional to a root
lying in that eigenspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .coxgroup import (
    DEFAULT_ORACLE_THRESHOLD,
    GroupElement,
    act,
    element_table,
    inverse_table,
    is_central_longest,
    longest_element,
    matrix,
    rows_to_indices,
    subset_classes,
)
from .errors import ContractError
from .exactfield import Vector, direction_key, identity_matrix, kernel, proportional
from .rootsystem import CoxeterType, RootSystem, classify_components


@dataclass(frozen=True)
class EigenDecomposition:
    basis1: tuple  # basis of V_1, simple-root coordinates
    basisM1: tuple  # basis of V_-1
    phi1: frozenset  # root indices in V_1
    phiM1: frozenset  # root indices in V_-1

    @property
    def dim1(self) -> int:
        return len(self.basis1)

    @property
    def dimM1(self) -> int:
        return len(self.basisM1)


@dataclass(frozen=True)
class InvolutionClass:
    J: tuple[int, ...]
    wJ: GroupElement
    components: tuple[CoxeterType, ...]
    eig: EigenDecomposition
    special: bool

    @property
    def even(self) -> bool:
        # det w_J = (-1)^(dim V_-1)
        return self.eig.dimM1 % 2 == 0

    @property
    def is_identity(self) -> bool:
        return not self.J


def _require_involution(w: GroupElement) -> None:
    if not w.is_involution():
        raise ContractError("expected an involution")


def eigenspaces(rs: RootSystem, w: GroupElement) -> EigenDecomposition:
    _require_involution(w)
    M = matrix(rs, w)
    ident = identity_matrix(rs.field, rs.rank)
    minus = tuple(tuple(a - b for a, b in zip(r, i)) for r, i in zip(M, ident))
    plus = tuple(tuple(a + b for a, b in zip(r, i)) for r, i in zip(M, ident))
    phi1 = frozenset(i for i, j in enumerate(w.perm) if i == j)
    phiM1 = frozenset(i for i, j in enumerate(w.perm) if j == rs.neg[i])
    eig = EigenDecomposition(tuple(kernel(minus)), tuple(kernel(plus)), phi1, phiM1)
    if eig.dim1 + eig.dimM1 != rs.rank:
        raise ContractError("eigenspaces do not span V")
    return eig


def project(rs: RootSystem, w: GroupElement, v: Vector, eps: int) -> Vector:
    """Projection of v onto V_eps along V_-eps: (v + eps w(v)) / 2."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    wv = act(rs, w, v)
    half = rs.field(1) / 2
    return tuple((a + b) * half if eps == 1 else (a - b) * half for a, b in zip(v, wv))


def _pair_key(rs: RootSystem, a: int, b: int, eps: int):
    """Direction key of roots[a] + eps * roots[b], i.e. of a projection of a root.

    The projection of root a onto V_eps is (a + eps w(a))/2, so its direction
    depends only on the pair (a, w(a)); keys are memoised per root system.
    """
    cache = rs._cache.setdefault("pair_keys", {})
    k = (a, b, eps)
    if k not in cache:
        u, v = rs.roots[a], rs.roots[b]
        cache[k] = direction_key(tuple(x + y if eps == 1 else x - y for x, y in zip(u, v)))
    return cache[k]


def _root_keys(rs: RootSystem) -> list:
    keys = rs._cache.get("root_keys")
    if keys is None:
        keys = [direction_key(v) for v in rs.roots]
        rs._cache["root_keys"] = keys
    return keys


def is_special(rs: RootSystem, w: GroupElement) -> bool:
    """For every root a there is eps and b in Phi_eps with proj_eps(a) proportional to b.

    Proportionality to some root of Phi_eps is decided by comparing the
    normalised direction of the projection with those of Phi_eps.  A zero
    projection counts as proportional whenever Phi_eps is nonempty.
    """
    _require_involution(w)
    phi = {1: [], -1: []}
    for i, j in enumerate(w.perm):
        if i == j:
            phi[1].append(i)
        elif j == rs.neg[i]:
            phi[-1].append(i)
    keys = _root_keys(rs)
    dirs = {eps: {keys[i] for i in idx} for eps, idx in phi.items()}
    for a in range(len(rs.roots)):
        found = False
        for eps in (1, -1):
            if not phi[eps]:
                continue
            key = _pair_key(rs, a, w.perm[a], eps)
            if key is None or key in dirs[eps]:
                found = True
                break
        if not found:
            return False
    return True


def is_special_reference(rs: RootSystem, w: GroupElement) -> bool:
    """Literal pairwise version of :func:`is_special` (quadratic; for cross-checks)."""
    _require_involution(w)
    for a in range(len(rs.roots)):
        ok = False
        for eps in (1, -1):
            p = project(rs, w, rs.roots[a], eps)
            members = [b for b in range(len(rs.roots)) if w.perm[b] == (b if eps == 1 else rs.neg[b])]
            if any(proportional(p, rs.roots[b]) for b in members):
                ok = True
                break
        if not ok:
            return False
    return True


def involution_classes(rs: RootSystem) -> list[InvolutionClass]:
    """One class per subset class whose representative J has w_J central in W_J.

    Includes J = () (the identity).  Representatives are the canonical
    (lexicographically least) members of their subset class.
    """
    cached = rs._cache.get("involution_classes")
    if cached is not None:
        return cached
    out = []
    for cls in subset_classes(rs):
        J = cls[0]
        if not is_central_longest(rs, J):
            continue
        w = longest_element(rs, J)
        out.append(InvolutionClass(J, w, classify_components(rs, J), eigenspaces(rs, w), is_special(rs, w)))
    rs._cache["involution_classes"] = out
    return out


def special_class_reps(rs: RootSystem) -> list[InvolutionClass]:
    """X_W: the special involution classes, identity included."""
    return [c for c in involution_classes(rs) if c.special]


def verify_involution_classes(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> dict:
    """Brute check that the class representatives are pairwise non-conjugate and exhaust all involutions."""
    P = element_table(rs, limit)
    Pinv = inverse_table(rs, limit)
    ident = np.arange(P.shape[1])
    is_inv = np.all(np.take_along_axis(P, P.astype(np.int64), axis=1) == ident, axis=1)
    involutions = set(np.flatnonzero(is_inv).tolist())
    seen: set = set()
    disjoint = True
    for c in involution_classes(rs):
        w = np.array(c.wJ.perm, dtype=np.int64)
        # x w x^-1 for every x
        conj = np.take_along_axis(P, w[Pinv.astype(np.int64)], axis=1)
        orbit = set(np.unique(rows_to_indices(rs, conj, limit)).tolist())
        if orbit & seen:
            disjoint = False
        seen |= orbit
    return {
        "involutions": len(involutions),
        "covered": len(seen & involutions),
        "disjoint": disjoint,
        "exhaustive": seen == involutions,
        "ok": disjoint and seen == involutions,
    }


def conjugate_element(x: GroupElement, w: GroupElement) -> GroupElement:
    return x * w * x.inverse()


def lemma_hypothesis(c: InvolutionClass) -> bool:
    """dim V_1 = 1 with Phi_1 nonempty, or dim V_-1 = 1."""
    return (c.eig.dim1 == 1 and bool(c.eig.phi1)) or c.eig.dimM1 == 1


def phi_J(rs: RootSystem, J: Iterable[int]) -> frozenset:
    """Indices of the roots in the span of the simple roots of J."""
    J = set(J)
    return frozenset(
        i for i, v in enumerate(rs.roots) if all(not c for k, c in enumerate(v) if k + 1 not in J)
    )
