"""Sweep driver: every check that ``coxspecial verify`` runs for one type."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .coxgroup import DEFAULT_ORACLE_THRESHOLD, class_of, subset_classes
from .fvcharacters import conjugacy_classes, fv_character, inner_product, trivial_character
from .involutions import involution_classes, lemma_hypothesis, phi_J, special_class_reps, verify_involution_classes
from .normalizers import (
    BulkyClassRow,
    Prop2Row,
    RemarkCheck,
    TheoremReport,
    centrality_consistency,
    check_remark,
    classify_bulky_all,
    fast_brute_agreement,
    special_is_class_function,
    verify_prop2,
    verify_theorem1,
)
from .rootsystem import CoxeterType, RootSystem, build, classify_components, parse_type

log = logging.getLogger(__name__)


def default_sweep(max_rank: int | None = None) -> list[CoxeterType]:
    """A/B/C up to rank 7, D4-D8, E6-E8, F4, H3, H4, I2(5..12); optionally capped by rank."""
    abc = 7 if max_rank is None else max_rank
    d = 8 if max_rank is None else max_rank
    cap = 8 if max_rank is None else max_rank
    types = [CoxeterType("A", n) for n in range(1, abc + 1)]
    types += [CoxeterType(f, n) for f in "BC" for n in range(2, abc + 1)]
    types += [CoxeterType("D", n) for n in range(4, d + 1)]
    types += [CoxeterType("E", n) for n in range(6, min(cap, 8) + 1)]
    if cap >= 4:
        types.append(CoxeterType("F", 4))
    types += [CoxeterType("H", n) for n in (3, 4) if n <= cap]
    if cap >= 2:
        types += [CoxeterType("I2", 2, m) for m in range(5, 13)]
    return sorted(types, key=str)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class TypeVerification:
    rs: RootSystem
    theorem: TheoremReport
    bulky_rows: list[BulkyClassRow]
    remark: RemarkCheck
    checks: list[Check] = field(default_factory=list)
    prop2: list[Prop2Row] | None = None
    oracle: bool = False

    @property
    def ok(self) -> bool:
        return self.theorem.ok and all(c.ok for c in self.checks)

    @property
    def counterexamples(self) -> list:
        return self.theorem.failures


def c_shape_expected(n: int) -> set[tuple[int, ...]]:
    """Subsets of type C_m (tail of the diagram) and C_m x A1 (plus node 1)."""
    out = set()
    for m in range(0, n + 1):
        tail = tuple(range(n - m + 1, n + 1))
        out.add(tail)
        if m <= n - 2:
            out.add((1,) + tail)
    return out


def shape_check(rs: RootSystem) -> Check | None:
    ct = rs.ctype
    specials = special_class_reps(rs)
    if ct.family == "A":
        ok = len(specials) == 2
        return Check("shape A_n: |X_W| = 2", ok, f"|X_W| = {len(specials)}")
    if ct.family in ("B", "C"):
        bulky_central = {r.J for r in classify_bulky_all(rs) if r.bulky and r.central}
        expected = {class_of(rs, J)[0] for J in c_shape_expected(ct.rank)}
        ok = bulky_central == expected
        detail = "" if ok else f"got {sorted(bulky_central)}, expected {sorted(expected)}"
        return Check(f"shape {ct.family}_n: bulky central = C_m, C_m x A1", ok, detail)
    if ct.family == "D" and ct.rank % 2 == 0:
        n = ct.rank // 2
        smaller = list(classify_components(rs, range(3, ct.rank + 1))) if n > 1 else []
        allowed = {(CoxeterType("A", 1),), tuple(sorted(smaller + [CoxeterType("A", 1)], key=CoxeterType.sort_key))}
        full = tuple(range(1, ct.rank + 1))
        bad = [
            r.J
            for r in classify_bulky_all(rs)
            if r.bulky and r.central and r.J not in ((), full) and classify_components(rs, r.J) not in allowed
        ]
        return Check("shape D_2n: bulky = A1 or D_2(n-1) x A1", not bad, f"unexpected {bad}" if bad else "")
    return None


def verify_type(
    ctype: CoxeterType | str,
    threshold: int = DEFAULT_ORACLE_THRESHOLD,
    seed: int = 0,
    samples: int = 100,
) -> TypeVerification:
    rs = build(parse_type(ctype) if isinstance(ctype, str) else ctype)
    log.info("verifying %s", rs.ctype)
    oracle = rs.order <= threshold
    theorem = verify_theorem1(rs, threshold)
    rows = classify_bulky_all(rs)
    remark = check_remark(rs, rows)
    out = TypeVerification(rs, theorem, rows, remark, oracle=oracle)
    out.checks.append(Check("remark on bulky vs central", remark.ok, f"bulky non-central: {remark.bulky_noncentral}"))

    bad = centrality_consistency(rs)
    out.checks.append(Check("centrality by action == type predicate", not bad, f"mismatch on {bad}" if bad else ""))

    lemma_bad = [c.J for c in involution_classes(rs) if lemma_hypothesis(c) and not c.special]
    out.checks.append(Check("lemma: 1-dimensional eigenspace => special", not lemma_bad, str(lemma_bad) if lemma_bad else ""))

    phi_bad = [c.J for c in involution_classes(rs) if set(c.eig.phiM1) != set(phi_J(rs, c.J))]
    out.checks.append(Check("Phi_-1(w_J) == Phi_J", not phi_bad, str(phi_bad) if phi_bad else ""))

    shape = shape_check(rs)
    if shape is not None:
        out.checks.append(shape)

    if oracle:
        disagree = fast_brute_agreement(rs, threshold)
        out.checks.append(Check("bulky fast == brute on all subset classes", not disagree, str(disagree) if disagree else ""))
        prop2 = verify_prop2(rs, threshold)
        out.prop2 = prop2
        p2_bad = [r.J for r in prop2 if not r.equal]
        out.checks.append(Check("C_W(w_J) == N_W(W_J)", not p2_bad, str(p2_bad) if p2_bad else ""))
        inv = verify_involution_classes(rs, threshold)
        out.checks.append(Check("involution classes exhaustive and disjoint", inv["ok"], f"{inv['covered']}/{inv['involutions']}"))
        from .coxgroup import subset_classes_brute

        same = subset_classes_brute(rs, threshold) == subset_classes(rs)
        out.checks.append(Check("subset classes: move graph == brute orbits", same))
        cf = special_is_class_function(rs, samples, seed, threshold)
        out.checks.append(Check(f"is_special is a class function ({samples} samples/class)", cf))
        out.checks.extend(character_checks(rs, threshold))
    return out


def character_checks(rs: RootSystem, threshold: int = DEFAULT_ORACLE_THRESHOLD) -> list[Check]:
    cd = conjugacy_classes(rs, threshold)
    triv = trivial_character(cd)
    chi = fv_character(rs, False, threshold)
    tw = fv_character(rs, True, threshold)
    specials = special_class_reps(rs)
    n_even = sum(1 for c in specials if c.even)
    return [
        Check("character degree == |W|", chi.degree == cd.order, f"{chi.degree} vs {cd.order}"),
        Check("<chi, 1> == |X_W|", inner_product(cd, chi, triv) == len(specials), f"|X_W| = {len(specials)}"),
        Check("<chi_twisted, 1> == |X_W even|", inner_product(cd, tw, triv) == n_even, f"even = {n_even}"),
    ]


def class_signature(rs: RootSystem) -> list[tuple]:
    """Type-independent summary of the involution classes, for comparing isomorphic groups."""
    return sorted(
        (len(c.J), c.eig.dim1, c.eig.dimM1, c.special, c.even)
        for c in involution_classes(rs)
    )


def dihedral_consistency() -> list[Check]:
    """I2(3) ~ A2, I2(4) ~ C2 ~ B2, and I2(6) behaves like the other even dihedral groups."""
    pairs = [("I2(3)", "A2"), ("I2(4)", "C2"), ("I2(4)", "B2"), ("I2(6)", "I2(4)")]
    out = []
    for a, b in pairs:
        ra, rb = build(parse_type(a)), build(parse_type(b))
        same = class_signature(ra) == class_signature(rb)
        same &= sorted((len(r.J), r.size, r.bulky, r.central) for r in classify_bulky_all(ra)) == sorted(
            (len(r.J), r.size, r.bulky, r.central) for r in classify_bulky_all(rb)
        )
        out.append(Check(f"{a} verdicts match {b}", same))
    return out
