"""Root systems of the irreducible finite Coxeter types, Bourbaki labelling.

Roots are stored in simple-root coordinates over a single exact field.  The
crystallographic types additionally carry the Bourbaki ambient realisation
(coordinates in the epsilon basis) so that vectors can be read back as, e.g.,
``eps_1 - eps_2``.  The non-crystallographic types H3, H4 and I2(m) are given by
their Gram matrix only, normalised so that every simple root has squared length 2.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ContractError, DomainError
from .exactfield import FieldSpec, Scalar, Vector, minpoly_2cos, solve

FAMILIES = ("A", "B", "C", "D", "E", "F", "H", "I2")


@dataclass(frozen=True, order=True)
class CoxeterType:
    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        if not is_admissible(self.family, self.rank, self.m):
            raise DomainError(f"inadmissible Coxeter type {self.family}{self.rank} (m={self.m})")

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    def sort_key(self):
        return (FAMILIES.index(self.family), self.rank, self.m or 0)


def is_admissible(family: str, rank: int, m: int | None = None) -> bool:
    if family == "I2":
        return rank == 2 and m is not None and m >= 3
    if m is not None:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "H": rank in (3, 4),
    }.get(family, False)


_TYPE_RE = re.compile(r"^\s*([A-Ha-h])\s*(\d+)\s*$")
_I2_RE = re.compile(r"^\s*[Ii]2\s*\(\s*(\d+)\s*\)\s*$")


def parse_type(text: str) -> CoxeterType:
    """Parse "A5", "d6", "H3", "I2(7)" into a CoxeterType."""
    mt = _I2_RE.match(text)
    if mt:
        return CoxeterType("I2", 2, int(mt.group(1)))
    mt = _TYPE_RE.match(text)
    if not mt:
        raise DomainError(f"cannot parse Coxeter type {text!r}")
    family, rank = mt.group(1).upper(), int(mt.group(2))
    if family == "G":
        raise DomainError("G2 is available as I2(6)")
    return CoxeterType(family, rank)


def group_order(ctype: CoxeterType) -> int:
    n = ctype.rank
    f = ctype.family
    if f == "A":
        return math.factorial(n + 1)
    if f in ("B", "C"):
        return 2**n * math.factorial(n)
    if f == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if f == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if f == "F":
        return 1152
    if f == "H":
        return {3: 120, 4: 14400}[n]
    return 2 * ctype.m


def longest_is_minus_one(ctype: CoxeterType) -> bool:
    """Whether w_S = -1, i.e. whether the longest element is central in W."""
    f, n = ctype.family, ctype.rank
    if f == "A":
        return n == 1
    if f == "D":
        return n % 2 == 0
    if f == "E":
        return n != 6
    if f == "I2":
        return ctype.m % 2 == 0
    return True


def has_central_longest(components) -> bool:
    """Centrality of w_J from the component types of W_J alone.

    w_J is central in W_J iff no component is A_n (n >= 2), D_odd, E6 or I2(odd).
    """
    return all(longest_is_minus_one(c) for c in components)


# ---------------------------------------------------------------------------
# ambient Bourbaki realisations
# ---------------------------------------------------------------------------

def _unit(dim: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return v


def _diff(dim, i, j):
    v = _unit(dim, i)
    v[j] -= 1
    return v


def _ambient_simple_roots(ct: CoxeterType) -> list[list[Fraction]] | None:
    f, n = ct.family, ct.rank
    if f == "A":
        return [_diff(n + 1, i, i + 1) for i in range(n)]
    if f in ("B", "C", "D"):
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        if f == "B":
            roots.append(_unit(n, n - 1))
        elif f == "C":
            roots.append(_unit(n, n - 1, 2))
        else:
            last = _unit(n, n - 2)
            last[n - 1] = Fraction(1)
            roots.append(last)
        return roots
    if f == "E":
        h = Fraction(1, 2)
        e8 = [[h, -h, -h, -h, -h, -h, -h, h], _unit(8, 0)]
        e8[1][1] = Fraction(1)
        for i in range(1, 7):
            e8.append(_diff(8, i, i - 1))
        return e8[:n]
    if f == "F":
        h = Fraction(1, 2)
        return [_diff(4, 1, 2), _diff(4, 2, 3), _unit(4, 3), [h, -h, -h, -h]]
    return None


def _coxeter_matrix_nc(ct: CoxeterType) -> list[list[int]]:
    n = ct.rank
    M = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    if ct.family == "I2":
        M[0][1] = M[1][0] = ct.m
    else:  # H3, H4: 1 -5- 2 - 3 (- 4)
        M[0][1] = M[1][0] = 5
        for i in range(1, n - 1):
            M[i][i + 1] = M[i + 1][i] = 3
    return M


# ---------------------------------------------------------------------------
# the root system
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class RootSystem:
    """Root system of one irreducible finite Coxeter type.

    ``roots[i]`` is a tuple of Scalars: the coordinates of the i-th root in the
    basis of simple roots.  Root indices ``0..rank-1`` are the simple roots in
    Bourbaki order; the simple label s (1-based, as used for subsets J and
    words everywhere in the package) is root index s - 1.
    """

    ctype: CoxeterType
    field: FieldSpec
    gram: tuple  # Gram matrix of the simple roots, tuple of rows of Scalars
    roots: tuple
    index: dict  # coordinate tuple -> root index
    positive: frozenset
    neg: tuple  # neg[i] = index of -roots[i]
    ambient_simple: tuple | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.ctype.rank

    @property
    def simple(self) -> tuple:
        return self.roots[: self.rank]

    @property
    def order(self) -> int:
        return group_order(self.ctype)

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return f"RootSystem({self.ctype}, |Phi|={len(self.roots)})"

    def is_positive(self, idx: int) -> bool:
        return idx in self.positive

    def root_index(self, v: Vector) -> int:
        return self.index[tuple(v)]

    def form(self, u: Vector, v: Vector) -> Scalar:
        """The W-invariant bilinear form B(u, v) on simple-root coordinates."""
        acc = self.field.zero()
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and self.gram[i][j]:
                    acc = acc + a * b * self.gram[i][j]
        return acc

    # ambient coordinates ------------------------------------------------

    def to_ambient(self, v: Vector) -> tuple[Fraction, ...]:
        if self.ambient_simple is None:
            raise DomainError(f"{self.ctype} has no ambient epsilon realisation")
        dim = len(self.ambient_simple[0])
        out = [Fraction(0)] * dim
        for c, a in zip(v, self.ambient_simple):
            q = c.to_fraction()
            if q:
                for k in range(dim):
                    out[k] += q * a[k]
        return tuple(out)

    def from_ambient(self, u) -> Vector:
        """Simple-root coordinates of an ambient vector in the span of the roots."""
        if self.ambient_simple is None:
            raise DomainError(f"{self.ctype} has no ambient epsilon realisation")
        F = self.field
        dim = len(self.ambient_simple[0])
        M = tuple(tuple(F(a[k]) for a in self.ambient_simple) for k in range(dim))
        x = solve(M, tuple(F(c) for c in u))
        if x is None:
            raise DomainError(f"{u} is not in the span of the roots")
        return x

    def root_str(self, idx_or_vec) -> str:
        v = self.roots[idx_or_vec] if isinstance(idx_or_vec, int) else idx_or_vec
        if self.ambient_simple is not None:
            return _format_eps(self.to_ambient(v))
        return "(" + ", ".join(str(c) for c in v) + ")"


def _format_eps(u) -> str:
    parts = []
    for k, c in enumerate(u):
        if c == 0:
            continue
        sgn = "-" if c < 0 else "+"
        a = abs(c)
        coef = "" if a == 1 else (f"{a}" if a.denominator == 1 else f"{a.numerator}/{a.denominator}")
        parts.append(f"{sgn}{coef}e{k + 1}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def reflect(rs: RootSystem, v: Vector, root_idx: int) -> Vector:
    """v - 2 B(v, a)/B(a, a) a for the root a = roots[root_idx]."""
    a = rs.roots[root_idx]
    c = 2 * rs.form(v, a) / rs.form(a, a)
    if not c:
        return tuple(v)
    return tuple(x - c * y for x, y in zip(v, a))


def _simple_reflect(v: Vector, i: int, cartan_row) -> Vector:
    # s_i changes only the i-th coordinate: v_i -> v_i - <v, alpha_i^vee>
    pairing = sum((x * c for x, c in zip(v, cartan_row) if x and c), v[i] * 0)
    if not pairing:
        return v
    out = list(v)
    out[i] = v[i] - pairing
    return tuple(out)


def _is_nonneg(v: Vector) -> bool:
    signs = {c.sign() for c in v if c}
    if len(signs) != 1:
        raise ContractError(f"root with mixed-sign coordinates: {v}")
    return signs == {1}


@lru_cache(maxsize=None)
def build(ctype: CoxeterType) -> RootSystem:
    """Construct the root system of an admissible irreducible type.

    The full root set is the closure of the simple roots under the simple
    reflections, generated breadth-first.
    """
    if not isinstance(ctype, CoxeterType):
        ctype = parse_type(str(ctype))
    n = ctype.rank
    amb = _ambient_simple_roots(ctype)
    if amb is not None:
        F = FieldSpec.rational()
        gram = tuple(tuple(F(sum(x * y for x, y in zip(a, b))) for b in amb) for a in amb)
    else:
        M = _coxeter_matrix_nc(ctype)
        m_big = ctype.m if ctype.family == "I2" else 5
        F = minpoly_2cos(m_big)
        # B(a_i, a_j) = -2cos(pi/m_ij), B(a_i, a_i) = 2
        gram = tuple(
            tuple(
                F(2) if i == j else (F.zero() if M[i][j] == 2 else (-F.gen if M[i][j] == m_big else F(-1)))
                for j in range(n)
            )
            for i in range(n)
        )
    # Cartan-type pairing: cartan[i][j] = 2 B(a_j, a_i)/B(a_i, a_i), so that
    # <v, a_i^vee> = sum_j v_j cartan[i][j]
    cartan = [[2 * gram[i][j] / gram[i][i] for j in range(n)] for i in range(n)]

    simple = [tuple(F.one() if k == i else F.zero() for k in range(n)) for i in range(n)]
    roots = list(simple)
    index = {r: i for i, r in enumerate(roots)}
    queue = deque(roots)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = _simple_reflect(v, i, cartan[i])
            if w not in index:
                index[w] = len(roots)
                roots.append(w)
                queue.append(w)
    # deterministic order: simple roots first, then positive roots by height and
    # lexicographic coordinates, then their negatives in the same order
    positive = [r for r in roots if _is_nonneg(r)]
    if 2 * len(positive) != len(roots):
        raise ContractError(f"{ctype}: positive roots are not half of all roots")

    def key(r):
        return (sum(r, F.zero()), r)

    simple_set = set(simple)
    rest = sorted((r for r in positive if r not in simple_set), key=key)
    ordered_pos = simple + rest
    ordered = ordered_pos + [tuple(-c for c in r) for r in ordered_pos]
    index = {r: i for i, r in enumerate(ordered)}
    if len(index) != len(ordered):
        raise ContractError("duplicate roots after ordering")
    npos = len(ordered_pos)
    neg = tuple((i + npos) % (2 * npos) for i in range(2 * npos))
    return RootSystem(
        ctype=ctype,
        field=F,
        gram=gram,
        roots=tuple(ordered),
        index=index,
        positive=frozenset(range(npos)),
        neg=neg,
        ambient_simple=tuple(tuple(a) for a in amb) if amb is not None else None,
    )


# ---------------------------------------------------------------------------
# sub-diagram classification
# ---------------------------------------------------------------------------

def bond_order(rs: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j, read off the 2x2 block of the Gram matrix.

    4cos^2(pi/m) = 4 B_ij^2 / (B_ii B_jj); the order m is confirmed exactly by
    powering the rank-2 reflection matrix until it becomes the identity.
    """
    if i == j:
        return 1
    g = rs.gram
    if not g[i][j]:
        return 2
    c = 4 * g[i][j] * g[i][j] / (g[i][i] * g[j][j])
    if c.is_rational():
        guess = {1: 3, 2: 4, 3: 6}.get(c.to_fraction())
    else:
        guess = None
    # s_i, s_j on span(a_i, a_j) in the basis (a_i, a_j)
    ci = 2 * g[i][j] / g[i][i]
    cj = 2 * g[i][j] / g[j][j]
    F = rs.field
    one, zero = F.one(), F.zero()
    si = ((-one, -ci), (zero, one))
    sj = ((one, zero), (-cj, -one))

    def mul(a, b):
        return tuple(tuple(a[r][0] * b[0][c] + a[r][1] * b[1][c] for c in range(2)) for r in range(2))

    prod = mul(si, sj)
    ident = ((one, zero), (zero, one))
    p = prod
    limit = guess or 4 * max(rs.ctype.m or 6, 6)
    for k in range(1, limit + 1):
        if p == ident:
            return k
        p = mul(p, prod)
    raise ContractError(f"bond order between {i} and {j} not found")


def _diagram(rs: RootSystem):
    cache = rs._cache.get("diagram")
    if cache is None:
        n = rs.rank
        cache = [[bond_order(rs, i, j) for j in range(n)] for i in range(n)]
        rs._cache["diagram"] = cache
    return cache


def components(rs: RootSystem, J) -> list[tuple[int, ...]]:
    """Connected components of the Coxeter sub-diagram on J.

    J holds 1-based simple labels; the components are returned 0-based.
    """
    D = _diagram(rs)
    J = sorted(s - 1 for s in J)
    seen: set[int] = set()
    comps = []
    for start in J:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in J:
                if j not in seen and D[i][j] >= 3:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _classify_connected(rs: RootSystem, comp) -> CoxeterType:
    D = _diagram(rs)
    k = len(comp)
    if k == 1:
        return CoxeterType("A", 1)
    edges = [(i, j, D[i][j]) for a, i in enumerate(comp) for j in comp[a + 1:] if D[i][j] >= 3]
    labels = sorted(m for _, _, m in edges)
    deg = {i: sum(1 for e in edges if i in e[:2]) for i in comp}
    if len(edges) != k - 1:
        raise ContractError(f"sub-diagram on {comp} is not a tree")
    top = labels[-1]
    if k == 2:
        if top == 3:
            return CoxeterType("A", 2)
        if top == 4:
            i, j = comp
            return CoxeterType(_b_or_c(rs, end=j, other=i), 2)
        return CoxeterType("I2", 2, top)
    if top >= 5:
        if top == 5 and labels.count(5) == 1 and k in (3, 4) and max(deg.values()) <= 2:
            i, j, _ = next(e for e in edges if e[2] == 5)
            if deg[i] == 1 or deg[j] == 1:
                return CoxeterType("H", k)
        raise ContractError(f"unclassifiable component {comp}")
    if top == 4:
        if labels.count(4) != 1 or max(deg.values()) > 2:
            raise ContractError(f"unclassifiable component {comp}")
        i, j, _ = next(e for e in edges if e[2] == 4)
        if deg[i] == 2 and deg[j] == 2:
            if k == 4:
                return CoxeterType("F", 4)
            raise ContractError(f"unclassifiable component {comp}")
        end, other = (i, j) if deg[i] == 1 else (j, i)
        return CoxeterType(_b_or_c(rs, end=end, other=other), k)
    # simply laced
    branch = [i for i in comp if deg[i] >= 3]
    if not branch:
        return CoxeterType("A", k)
    if len(branch) > 1 or deg[branch[0]] != 3:
        raise ContractError(f"unclassifiable component {comp}")
    b = branch[0]
    arms = []
    for nb in (j for j in comp if D[b][j] >= 3):
        length, prev, cur = 1, b, nb
        while True:
            nxt = [j for j in comp if j != prev and D[cur][j] >= 3]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CoxeterType("D", k)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return CoxeterType("E", k)
    raise ContractError(f"unclassifiable component {comp}")


def _b_or_c(rs: RootSystem, end: int, other: int) -> str:
    # B when the end node beyond the double bond is short, C when it is long
    a, b = rs.gram[end][end], rs.gram[other][other]
    return "C" if (a - b).sign() > 0 else "B"


def classify_components(rs: RootSystem, J) -> tuple[CoxeterType, ...]:
    """Component types of W_J (J given by 1-based simple labels), sorted."""
    types = [_classify_connected(rs, c) for c in components(rs, J)]
    return tuple(sorted(types, key=CoxeterType.sort_key))


def format_components(types) -> str:
    if not types:
        return "1"
    counts: dict[str, int] = {}
    for t in sorted(types, key=lambda t: (-t.rank, t.sort_key())):
        counts[str(t)] = counts.get(str(t), 0) + 1
    return " x ".join(name if c == 1 else f"{name}^{c}" for name, c in counts.items())
