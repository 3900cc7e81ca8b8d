"""Exact arithmetic in Q and in real fields Q(gamma), plus small exact linear algebra.

Polynomials are plain lists of :class:`~fractions.Fraction`, lowest degree first.
A field is described by the monic minimal polynomial of its generator together
with a rational isolating interval for the real root that the generator denotes.
Signs of field elements are decided exactly by interval refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, InvalidOperandError

Poly = list  # list[Fraction], lowest degree first


# ---------------------------------------------------------------------------
# polynomial helpers over Q
# ---------------------------------------------------------------------------

def poly_trim(p: Sequence) -> list[Fraction]:
    p = [c if type(c) is Fraction else Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    if len(p) == 1 and len(q) == 1:
        c = p[0] * q[0]
        return [c] if c else []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Quotient and remainder of p by q (q nonzero)."""
    q = poly_trim(q)
    if not q:
        raise InvalidOperandError("polynomial division by zero")
    r = poly_trim(p)
    if len(r) < len(q):
        return [], r
    quot = [Fraction(0)] * (len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q):
        c = r[-1] / lead
        k = len(r) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r = poly_trim(r)
    return poly_trim(quot), r


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def sturm_sequence(p) -> list[list[Fraction]]:
    seq = [poly_trim(p), poly_derivative(p)]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = poly_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def sturm_count(seq, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of seq[0] in the half-open interval (lo, hi]."""

    def variations(x):
        signs = [s for s in (_sgn(poly_eval(q, x)) for q in seq) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(lo) - variations(hi)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def chebyshev_like(m: int) -> list[Fraction]:
    """Polynomial C_m with C_m(z + 1/z) = z^m + z^-m."""
    prev, cur = [Fraction(2)], [Fraction(0), Fraction(1)]
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, poly_sub(poly_mul([0, 1], cur), prev)
    return cur


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[Fraction, ...]:
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            p, r = poly_divmod(p, list(_cyclotomic(d)))
            assert not r
    return tuple(p)


def _real_cyclotomic(n: int) -> list[Fraction]:
    """Polynomial in x = z + 1/z whose roots are 2cos(2 pi k/n), gcd(k, n) = 1."""
    if n == 1:
        return [Fraction(-2), Fraction(1)]
    if n == 2:
        return [Fraction(2), Fraction(1)]
    phi = list(_cyclotomic(n))
    half = (len(phi) - 1) // 2
    out: list[Fraction] = [phi[half]]
    for j in range(1, half + 1):
        out = poly_add(out, [c * phi[half + j] for c in chebyshev_like(j)])
    return out


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldSpec:
    """Q(gamma) for a real algebraic gamma given by its monic minimal polynomial.

    ``minpoly`` is stored lowest degree first. ``interval`` is a rational interval
    (lo, hi] containing gamma and no other root of ``minpoly``.
    """

    kind: str
    minpoly: tuple[Fraction, ...]
    interval: tuple[Fraction, Fraction]
    m: int | None = None
    _refined: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        mp = poly_trim(self.minpoly)
        if not mp or mp[-1] != 1:
            raise DomainError("minimal polynomial must be monic")
        object.__setattr__(self, "minpoly", tuple(mp))
        lo, hi = self.interval
        if sturm_count(sturm_sequence(mp), lo, hi) != 1:
            raise DomainError(f"interval {lo}..{hi} does not isolate a single root")
        if self.degree > 1 and not _is_irreducible(mp):
            raise DomainError(f"{self.poly_str()} is reducible over Q")
        self._refined.append((lo, hi))

    @classmethod
    def rational(cls) -> "FieldSpec":
        return _RATIONAL

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def compatible(self, other: "FieldSpec") -> bool:
        return self is other or (self.degree == 1 and other.degree == 1) or self.minpoly == other.minpoly

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.compatible(other)

    def __hash__(self):
        return hash(self.minpoly if self.degree > 1 else 1)

    # elements -------------------------------------------------------------

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if not self.compatible(value.field):
                raise InvalidOperandError("mixed-field operation")
            return value
        return Scalar(self, (Fraction(value),))

    @property
    def gen(self) -> "Scalar":
        return Scalar(self, (Fraction(0), Fraction(1)))

    def zero(self) -> "Scalar":
        return Scalar(self, ())

    def one(self) -> "Scalar":
        return Scalar(self, (Fraction(1),))

    # real embedding ---------------------------------------------------------

    def gamma_interval(self, level: int = 0) -> tuple[Fraction, Fraction]:
        """Isolating interval for gamma after ``level`` bisection steps."""
        while len(self._refined) <= level:
            lo, hi = self._refined[-1]
            mid = (lo + hi) / 2
            if _sgn(poly_eval(self.minpoly, mid)) * _sgn(poly_eval(self.minpoly, hi)) <= 0:
                self._refined.append((mid, hi))
            else:
                self._refined.append((lo, mid))
        return self._refined[level]

    def approx(self) -> float:
        lo, hi = self.gamma_interval(60)
        return float((lo + hi) / 2)

    def describe(self) -> str:
        if self.degree == 1:
            return "Q"
        return f"Q(g), g = 2cos(pi/{self.m}), minpoly {self.poly_str()}"

    def poly_str(self) -> str:
        terms = []
        for i in range(len(self.minpoly) - 1, -1, -1):
            c = self.minpoly[i]
            if c == 0:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mon and abs(c) == 1:
                coef = "-" if c < 0 else "+"
                terms.append(f"{coef}{mon}")
            else:
                terms.append(f"{'+' if c > 0 else '-'}{abs(c)}{mon}")
        s = " ".join(terms)
        return s[1:] if s.startswith("+") else s


def _is_irreducible(mp) -> bool:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(mp))
    return sympy.Poly(expr, x, domain="QQ").is_irreducible


_RATIONAL = FieldSpec("rational", (Fraction(0), Fraction(1)), (Fraction(-1), Fraction(1)))


@lru_cache(maxsize=None)
def minpoly_2cos(m: int) -> FieldSpec:
    """The field Q(2cos(pi/m)), generated by gamma = 2cos(pi/m)."""
    if m < 3:
        raise DomainError(f"minpoly_2cos needs m >= 3, got {m}")
    # roots of C_m(x) + 2 are exactly 2cos((2k+1)pi/m), k = 0..m-1
    target = poly_add(chebyshev_like(m), [2])
    candidates = [_real_cyclotomic(d) for d in range(1, 2 * m + 1) if (2 * m) % d == 0 and m % d != 0]
    factors: list[list[Fraction]] = []
    rest = target
    for cand in candidates:
        while True:
            q, r = poly_divmod(rest, cand)
            if r:
                break
            factors.append(cand)
            rest = q
    assert rest == [1], "trial division left a non-unit cofactor"
    g0 = 2 * math.cos(math.pi / m)
    distinct = {tuple(f): f for f in factors}.values()
    best = min(distinct, key=lambda f: abs(poly_eval([float(c) for c in f], g0)))
    if len(best) - 1 != _totient(2 * m) // 2:
        raise DomainError(f"selected factor for m={m} has unexpected degree")
    eps = Fraction(1, 10**6)
    g = Fraction(g0).limit_denominator(10**12)
    kind = "quadratic-sqrt5" if m == 5 else "cos-extension"
    return FieldSpec(kind, tuple(best), (g - eps, g + eps), m=m)


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class Scalar:
    """An element of a FieldSpec, stored as its reduced residue polynomial in gamma."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, fld: FieldSpec, coeffs: Iterable):
        c = poly_trim(coeffs)
        if len(c) > fld.degree:
            _, c = poly_divmod(c, list(fld.minpoly))
        self.field = fld
        self.coeffs = tuple(c)
        self._hash = None

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if not self.field.compatible(other.field):
                raise InvalidOperandError("mixed-field operation")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, (Fraction(other),))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, poly_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, poly_sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Scalar(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.coeffs:
            raise InvalidOperandError("division by zero")
        if self.field.degree == 1:
            return Scalar(self.field, (1 / self.coeffs[0],))
        # extended Euclid: s*a + t*minpoly = 1
        r0, r1 = list(self.field.minpoly), list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        # r1 is a nonzero constant because minpoly is irreducible
        return Scalar(self.field, [c / r1[0] for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field.compatible(other.field) and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(poly_trim([other]))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if len(self.coeffs) <= 1:
                self._hash = hash(self.coeffs[0] if self.coeffs else 0)
            else:
                self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_fraction(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise InvalidOperandError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def sign(self) -> int:
        """Exact sign of the real number this element denotes."""
        if len(self.coeffs) <= 1:
            return _sgn(self.coeffs[0]) if self.coeffs else 0
        level = 0
        while True:
            lo, hi = self.field.gamma_interval(level)
            vlo, vhi = _interval_eval(self.coeffs, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            level += 4

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        g = self.field.approx()
        return float(sum(float(c) * g**i for i, c in enumerate(self.coeffs)))

    def coeff_strings(self) -> list[str]:
        """Coefficients as "p/q" strings, padded to the field degree."""
        c = list(self.coeffs) + [Fraction(0)] * (self.field.degree - len(self.coeffs))
        return [format_fraction(x) for x in c]

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mon = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if mon and c == 1:
                parts.append(mon)
            elif mon and c == -1:
                parts.append("-" + mon)
            else:
                parts.append(format_fraction(c) + ("*" + mon if mon else ""))
        return " + ".join(parts).replace("+ -", "- ")


def _interval_eval(coeffs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # Horner in interval arithmetic; lo, hi may be any sign
    a = b = Fraction(0)
    for c in reversed(coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# vectors and matrices: tuples of Scalars, matrices as tuples of rows
# ---------------------------------------------------------------------------

Vector = tuple
Matrix = tuple


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidOperandError(f"unknown operation {op!r}")


def identity_matrix(fld: FieldSpec, n: int) -> Matrix:
    return tuple(tuple(fld.one() if i == j else fld.zero() for j in range(n)) for i in range(n))


def mat_vec(M: Matrix, v: Vector) -> Vector:
    if any(len(row) != len(v) for row in M):
        raise InvalidOperandError("dimension mismatch")
    out = []
    for row in M:
        acc = v[0] * 0 if v else 0
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def _rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel(M: Matrix) -> list[Vector]:
    """Basis of the null space of M, one vector per free column."""
    if not M:
        return []
    n = len(M[0])
    if any(len(row) != n for row in M):
        raise InvalidOperandError("ragged matrix")
    fld = next((x.field for row in M for x in row), FieldSpec.rational())
    red, pivots = _rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [fld.zero()] * n
        v[f] = fld.one()
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def rank(M: Matrix) -> int:
    if not M:
        return 0
    return len(_rref(M)[1])


def solve(M: Matrix, b: Vector) -> Vector | None:
    """A solution x of M x = b, or None when the system is inconsistent."""
    n = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    red, pivots = _rref(aug)
    if n in pivots:
        return None
    fld = b[0].field
    x = [fld.zero()] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    return tuple(x)


def proportional(u: Vector, v: Vector) -> bool:
    if len(u) != len(v):
        raise InvalidOperandError("dimension mismatch")
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def direction_key(v: Vector) -> tuple | None:
    """Canonical key for the line spanned by v (None for the zero vector).

    Two nonzero vectors are proportional iff their keys coincide.
    """
    lead = next((x for x in v if x), None)
    if lead is None:
        return None
    inv = lead.inverse()
    return tuple((x * inv).coeffs for x in v)
