"""Bulky parabolic subgroups, normaliser oracles, and the theorem verifier.

W_J is bulky when its normaliser splits as W_J x N_J, N_J = {x in D_J : J^x = J},
i.e. when N_J centralises W_J.

The fast decision walks the groupoid on the subset class of J whose edges are
the elements w_L w_K (K = L + {s}), each mapping L onto L^{w_K}.  Loops at L
(L^{w_K} = L) are the generators used in the classical argument; whenever w_J is
central in W_J they already decide the question.  For non-central J the group N_J
may contain elements that only arise from closed paths through several subsets,
so the full closed-path test is what determines the verdict; both are reported.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .coxgroup import (
    DEFAULT_ORACLE_THRESHOLD,
    GroupElement,
    check_oracle_size,
    class_of,
    element_table,
    inverse_table,
    is_central_by_type,
    is_central_longest,
    longest_element,
    subset_classes,
)
from .errors import ContractError, SizeExceededError
from .involutions import conjugate_element, involution_classes, is_special
from .rootsystem import RootSystem, classify_components, format_components, group_order, longest_is_minus_one


@dataclass(frozen=True)
class Witness:
    """A generator w_L w_K that moves the simple reflection t of L.

    ``kind`` is "loop" for a generator with L^{w_K} = L, and "cycle" when the
    non-trivial action only appears around a closed path of the groupoid
    (then L -> L^{w_K} is the edge that closes the path).
    """

    L: tuple[int, ...]
    K: tuple[int, ...]
    t: int
    image: int
    kind: str = "loop"

    def as_dict(self) -> dict:
        return {"L": list(self.L), "K": list(self.K), "t": self.t, "image": self.image, "kind": self.kind}


@dataclass(frozen=True)
class NormalizerReport:
    J: tuple[int, ...]
    bulky: bool
    witness: Witness | None
    method: str  # "fast" or "brute"
    central: bool
    loop_bulky: bool | None = None  # fast path: verdict from loop generators alone
    n_J: int | None = None  # brute path: |N_J|
    normalizer_order: int | None = None  # brute path: |N_W(W_J)|


# ---------------------------------------------------------------------------
# fast path
# ---------------------------------------------------------------------------

def _edge(rs: RootSystem, L: tuple[int, ...], s: int) -> tuple[tuple[int, ...], dict[int, int]]:
    """The edge w_L w_K out of L: target subset and the bijection t -> t^{w_L w_K}.

    t^{w_L w_K} is the reflection in w_K w_L(alpha_t), a simple root of the target.
    """
    K = tuple(sorted(set(L) | {s}))
    wK, wL = longest_element(rs, K), longest_element(rs, L)
    r = rs.rank
    mapping = {}
    for t in L:
        img = wK.perm[wL.perm[t - 1]]
        if img >= r:
            raise ContractError(f"w_K w_L sends alpha_{t} to a non-simple root")
        mapping[t] = img + 1
    return tuple(sorted(mapping.values())), mapping


def bulky_fast(rs: RootSystem, J: Iterable[int]) -> NormalizerReport:
    J = tuple(sorted(J))
    central = is_central_longest(rs, J)
    members = class_of(rs, J)
    edges = []
    loop_witness = None
    for L in members:
        wL_central = is_central_longest(rs, L)
        for s in range(1, rs.rank + 1):
            if s in L:
                continue
            target, mapping = _edge(rs, L, s)
            edges.append((L, s, target, mapping))
            if target != L:
                continue
            moved = next((t for t in L if mapping[t] != t), None)
            if wL_central:
                # w_L central: t^{w_L w_K} = t^{w_K}, i.e. w_K(alpha_t) = -alpha_t
                wK = longest_element(rs, tuple(sorted(set(L) | {s})))
                moved_k = next((t for t in L if wK.perm[t - 1] != rs.neg[t - 1]), None)
                if (moved is None) != (moved_k is None):
                    raise ContractError(f"central shortcut disagrees at L={L}, s={s}")
            if moved is not None and loop_witness is None:
                loop_witness = Witness(L, tuple(sorted(set(L) | {s})), moved, mapping[moved], "loop")
    loop_bulky = loop_witness is None

    # closed paths: transport J along a spanning tree, then every edge must agree
    phi = {J: {t: t for t in J}}
    queue = deque([J])
    out_edges: dict = {}
    for L, s, target, mapping in edges:
        out_edges.setdefault(L, []).append((s, target, mapping))
    while queue:
        L = queue.popleft()
        for s, target, mapping in out_edges.get(L, []):
            if target not in phi:
                phi[target] = {t: mapping[phi[L][t]] for t in J}
                queue.append(target)
    if set(phi) != set(members):
        raise ContractError(f"groupoid on the class of {J} is not connected")
    cycle_witness = None
    for L, s, target, mapping in edges:
        for t in J:
            if mapping[phi[L][t]] != phi[target][t]:
                u = phi[L][t]
                cycle_witness = Witness(L, tuple(sorted(set(L) | {s})), u, mapping[u], "cycle")
                break
        if cycle_witness is not None:
            break
    bulky = cycle_witness is None
    if not loop_bulky and bulky:
        raise ContractError(f"loop generator moves J={J} but closed paths do not")
    if central and loop_bulky != bulky:
        raise ContractError(f"loop and closed-path verdicts differ for central J={J}")
    witness = loop_witness if not loop_bulky else cycle_witness
    return NormalizerReport(J, bulky, witness, "fast", central, loop_bulky=loop_bulky)


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------

def _tables(rs: RootSystem, limit: int):
    check_oracle_size(rs, limit, "normaliser oracle")
    P = element_table(rs, limit)
    Pinv = inverse_table(rs, limit)
    return P, Pinv


def _pos_mask(rs: RootSystem, arr: np.ndarray) -> np.ndarray:
    npos = len(rs.positive)  # positive roots occupy indices 0..npos-1
    return arr < npos


def _dj_mask(rs, P, Pinv, J) -> np.ndarray:
    # l(xs) > l(x) iff x(alpha_s) > 0;  l(sx) > l(x) iff x^-1(alpha_s) > 0
    mask = np.ones(len(P), dtype=bool)
    for s in J:
        mask &= _pos_mask(rs, P[:, s - 1]) & _pos_mask(rs, Pinv[:, s - 1])
    return mask


def coset_reps_DJ(rs: RootSystem, J: Iterable[int], limit: int = DEFAULT_ORACLE_THRESHOLD) -> list[GroupElement]:
    """Minimal length (W_J, W_J) double coset representatives."""
    J = tuple(sorted(J))
    P, Pinv = _tables(rs, limit)
    mask = _dj_mask(rs, P, Pinv, J)
    return [GroupElement(tuple(int(i) for i in row)) for row in P[mask]]


def _parabolic_mask(rs: RootSystem, P: np.ndarray, J) -> np.ndarray:
    """Rows lying in W_J: every positive root outside Phi_J stays positive."""
    from .involutions import phi_J

    inside = phi_J(rs, J)
    outside = [i for i in rs.positive if i not in inside]
    if not outside:
        return np.ones(len(P), dtype=bool)
    return np.all(_pos_mask(rs, P[:, outside]), axis=1)


def _normalizer_mask(rs: RootSystem, P, Pinv, J) -> np.ndarray:
    """x with x s x^-1 in W_J and x^-1 s x in W_J for all s in J.

    The reflection in a root b lies in W_J iff b is in Phi_J.
    """
    from .involutions import phi_J

    inside = np.zeros(len(rs.roots), dtype=bool)
    inside[list(phi_J(rs, J))] = True
    mask = np.ones(len(P), dtype=bool)
    for s in J:
        mask &= inside[P[:, s - 1]] & inside[Pinv[:, s - 1]]
    return mask


def bulky_brute(rs: RootSystem, J: Iterable[int], limit: int = DEFAULT_ORACLE_THRESHOLD) -> NormalizerReport:
    J = tuple(sorted(J))
    P, Pinv = _tables(rs, limit)
    dj = _dj_mask(rs, P, Pinv, J)
    # J^x = J for x in D_J: x maps each alpha_s (s in J) onto some alpha_t, t in J
    keeps = dj.copy()
    for s in J:
        keeps &= np.isin(P[:, s - 1], [t - 1 for t in J])
    NJ = P[keeps]
    fixes = np.ones(len(NJ), dtype=bool)
    for s in J:
        fixes &= NJ[:, s - 1] == s - 1
    witness = None
    if not np.all(fixes):
        x = NJ[np.argmin(fixes)]
        t = next(s for s in J if x[s - 1] != s - 1)
        witness = Witness(J, (), t, int(x[t - 1]) + 1, "brute")
    norm = _normalizer_mask(rs, P, Pinv, J)
    wj_order = int(np.count_nonzero(_parabolic_mask(rs, P, J)))
    expected_wj = 1
    for c in classify_components(rs, J):
        expected_wj *= group_order(c)
    if wj_order != expected_wj:
        raise ContractError(f"|W_J| = {wj_order}, expected {expected_wj}")
    n_norm = int(np.count_nonzero(norm))
    if not np.all(norm[keeps]) or n_norm != wj_order * len(NJ):
        raise ContractError(f"N_W(W_J) != W_J . N_J for J={J}")
    return NormalizerReport(
        J,
        bool(np.all(fixes)),
        witness,
        "brute",
        is_central_longest(rs, J),
        n_J=len(NJ),
        normalizer_order=n_norm,
    )


@dataclass
class Prop2Row:
    J: tuple[int, ...]
    centralizer_order: int
    normalizer_order: int
    equal: bool


def verify_prop2(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> list[Prop2Row]:
    """C_W(w_J) = N_W(W_J) for every involution class representative."""
    P, Pinv = _tables(rs, limit)
    rows = []
    for c in involution_classes(rs):
        w = np.array(c.wJ.perm, dtype=np.int64)
        # x w = w x as permutations of the roots
        cent = np.all(P[:, w] == w[P], axis=1)
        norm = _normalizer_mask(rs, P, Pinv, c.J)
        rows.append(Prop2Row(c.J, int(cent.sum()), int(norm.sum()), bool(np.array_equal(cent, norm))))
    return rows


# ---------------------------------------------------------------------------
# theorem verifier and full classification
# ---------------------------------------------------------------------------

@dataclass
class TheoremRow:
    J: tuple[int, ...]
    components: str
    dim1: int
    dimM1: int
    special: bool
    bulky: bool
    bulky_brute: bool | None
    even: bool
    witness: Witness | None

    @property
    def agree(self) -> bool:
        return self.special == self.bulky and self.bulky_brute in (None, self.bulky)


@dataclass
class TheoremReport:
    ctype: str
    rows: list[TheoremRow] = field(default_factory=list)
    brute: bool = False

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.rows)

    @property
    def failures(self) -> list[TheoremRow]:
        return [r for r in self.rows if not r.agree]


def verify_theorem1(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> TheoremReport:
    """special(w_J) == bulky(W_J) on every involution class; brute-checked in the oracle band."""
    brute = rs.order <= limit
    report = TheoremReport(str(rs.ctype), brute=brute)
    for c in involution_classes(rs):
        fast = bulky_fast(rs, c.J)
        bb = bulky_brute(rs, c.J, limit).bulky if brute else None
        report.rows.append(
            TheoremRow(
                c.J,
                format_components(c.components),
                c.eig.dim1,
                c.eig.dimM1,
                c.special,
                fast.bulky,
                bb,
                c.even,
                fast.witness,
            )
        )
    return report


@dataclass
class BulkyClassRow:
    J: tuple[int, ...]
    size: int
    components: str
    bulky: bool
    central: bool
    loop_bulky: bool


def classify_bulky_all(rs: RootSystem) -> list[BulkyClassRow]:
    rows = []
    for cls in subset_classes(rs):
        rep = bulky_fast(rs, cls[0])
        rows.append(
            BulkyClassRow(
                cls[0], len(cls), format_components(classify_components(rs, cls[0])), rep.bulky, rep.central, rep.loop_bulky
            )
        )
    return rows


@dataclass
class RemarkCheck:
    w0_central: bool
    bulky_noncentral: list[tuple[int, ...]]
    ok: bool


def check_remark(rs: RootSystem, rows: list[BulkyClassRow] | None = None) -> RemarkCheck:
    """With w_S central every bulky class has central w_J; otherwise some bulky class does not."""
    rows = classify_bulky_all(rs) if rows is None else rows
    w0_central = is_central_longest(rs, tuple(range(1, rs.rank + 1)))
    if w0_central != longest_is_minus_one(rs.ctype):
        raise ContractError("centrality of w_S disagrees with the type table")
    odd = [r.J for r in rows if r.bulky and not r.central]
    ok = (not odd) if w0_central else bool(odd)
    return RemarkCheck(w0_central, odd, ok)


def fast_brute_agreement(rs: RootSystem, limit: int = DEFAULT_ORACLE_THRESHOLD) -> list[tuple[tuple[int, ...], bool, bool]]:
    """(J, fast, brute) for every subset class where the two verdicts differ."""
    bad = []
    for cls in subset_classes(rs):
        f = bulky_fast(rs, cls[0]).bulky
        b = bulky_brute(rs, cls[0], limit).bulky
        if f != b:
            bad.append((cls[0], f, b))
    return bad


def centrality_consistency(rs: RootSystem) -> list[tuple[int, ...]]:
    """Subsets where centrality-by-action and the type-list predicate disagree."""
    from .coxgroup import all_subsets

    return [J for J in all_subsets(rs) if is_central_longest(rs, J) != is_central_by_type(rs, J)]


def special_is_class_function(rs: RootSystem, samples: int, seed: int, limit: int = DEFAULT_ORACLE_THRESHOLD) -> bool:
    """is_special(x w_J x^-1) == is_special(w_J) for random x (oracle band only)."""
    if rs.order > limit:
        raise SizeExceededError("class-function sampling", limit, rs.order)
    rng = random.Random(seed)
    P = element_table(rs, limit)
    for c in involution_classes(rs):
        for _ in range(samples):
            x = GroupElement(tuple(int(i) for i in P[rng.randrange(len(P))]))
            if is_special(rs, conjugate_element(x, c.wJ)) != c.special:
                return False
    return True
