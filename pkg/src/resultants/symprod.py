"""Symmetric products of the projective line.

The elementary homogeneous symmetric polynomials (EHSP) p_0..p_n define the
Viete map (P^1)^n -> P^n.  This module evaluates that map, lets S_n act on
tuples and on the x-alphabet, and rewrites invariants in the EHSP.  It also
holds the loci X_{n,m}, R_{n,m}, X_n and D_n with their membership tests.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import QQ, AlgebraError, Poly, Ring, VarTable
from .linalg import jacobian, rank_over_field, solve_linear
from .resultant import (
    BinaryForm,
    discriminant_symbolic,
    resultant_symbolic,
    xy_table,
)


# ---------------------------------------------------------------------------
# Points and permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, init=False)
class ProjPoint:
    """A point of projective space in normalized homogeneous coordinates.

    Over QQ/ZZ the coordinates are coprime integers whose first nonzero entry
    is positive; over F_p the first nonzero entry is 1.
    """

    coords: tuple
    ring: Ring

    def __init__(self, coords: Sequence, ring: Ring = QQ):
        vals = [ring(c) for c in coords]
        if not vals or all(c == 0 for c in vals):
            raise AlgebraError("the zero vector is not a projective point")
        if ring.is_field and getattr(ring, "p", None):
            lead = next(c for c in vals if c != 0)
            inv = ring.inverse(lead)
            vals = [ring.reduce(c * inv) for c in vals]
        else:
            fr = [Fraction(c) for c in vals]
            den = math.lcm(*(f.denominator for f in fr))
            ints = [int(f * den) for f in fr]
            g = math.gcd(*ints)
            ints = [x // g for x in ints]
            if next(x for x in ints if x != 0) < 0:
                ints = [-x for x in ints]
            vals = ints
        object.__setattr__(self, "coords", tuple(vals))
        object.__setattr__(self, "ring", ring)

    @classmethod
    def parse(cls, text: str, ring: Ring = QQ) -> "ProjPoint":
        """``"1:-3:2"`` or ``"(1:-3:2)"``."""
        body = text.strip().strip("()")
        try:
            return cls([Fraction(t.strip()) for t in body.split(":")], ring)
        except ValueError as exc:
            raise AlgebraError(f"bad point {text!r}: {exc}") from None

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def point_tuple(points: Sequence, ring: Ring = QQ) -> tuple[ProjPoint, ...]:
    """Normalize a sequence of coordinate pairs into a tuple of P^1 points."""
    out = tuple(p if isinstance(p, ProjPoint) else ProjPoint(p, ring) for p in points)
    if any(p.dim != 1 for p in out):
        raise AlgebraError("point tuples hold points of P^1")
    return out


def parse_tuple(text: str, ring: Ring = QQ) -> tuple[ProjPoint, ...]:
    """``"1:1, 1:2"`` -> ((1:1), (1:2))."""
    return point_tuple([ProjPoint.parse(t, ring) for t in text.split(",") if t.strip()], ring)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}, given by its list of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise AlgebraError(f"{self.images} is not a permutation")

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        im = list(range(n))
        im[i], im[j] = im[j], im[i]
        return cls(tuple(im))


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, i, i + 1) for i in range(n - 1)]


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(n))]


def sn_act(perm: Permutation, target, prefix: str = "x"):
    """Act by a permutation.

    On a point tuple the entry at position i moves to position perm(i).  On
    a Poly the variable pair (x0i, x1i) is renamed (x0perm(i), x1perm(i)),
    using 1-based pair labels; other variables are left alone.
    """
    if isinstance(target, Poly):
        table = target.table
        n = len(perm)
        moved = {}
        for i in range(1, n + 1):
            j = perm(i - 1) + 1
            for a in "01":
                src, dst = f"{prefix}{a}{i}", f"{prefix}{a}{j}"
                if src not in table or dst not in table:
                    raise AlgebraError(f"table lacks the pair variables for S_{n} acting on {prefix}")
                moved[table.index(src)] = table.index(dst)
        pos = [moved.get(k, k) for k in range(len(table))]
        out = {}
        for e, c in target.terms.items():
            new = [0] * len(e)
            for k, x in enumerate(e):
                new[pos[k]] = x
            out[tuple(new)] = c
        return Poly(table, target.ring, out)
    pts = tuple(target)
    if len(pts) != len(perm):
        raise AlgebraError(f"permutation of size {len(perm)} acting on {len(pts)} points")
    out = [None] * len(pts)
    for i, p in enumerate(pts):
        out[perm(i)] = p
    return tuple(out)


# ---------------------------------------------------------------------------
# Elementary homogeneous symmetric polynomials
# ---------------------------------------------------------------------------


def pair_table(n: int, prefix: str = "x") -> VarTable:
    pairs = [(f"{prefix}0{i}", f"{prefix}1{i}") for i in range(1, n + 1)]
    names = tuple(v for p in pairs for v in p)
    blocks = tuple((f"{prefix}{i}", p) for i, p in enumerate(pairs, 1)) + ((prefix, names),)
    return VarTable(names, blocks)


def expand_linear_product(n: int, prefix: str = "x") -> Poly:
    """F_n = prod_i (x0i*X - x1i*Y), expanded over the pair variables plus X, Y."""
    if n < 1:
        raise AlgebraError("the linear product needs n >= 1")
    big = pair_table(n, prefix).extend(["X", "Y"])
    X, Y = Poly.var("X", big), Poly.var("Y", big)
    F = Poly.const(1, big)
    for i in range(1, n + 1):
        F = F * (Poly.var(f"{prefix}0{i}", big) * X - Poly.var(f"{prefix}1{i}", big) * Y)
    return F


@lru_cache(maxsize=None)
def ehsp(n: int, prefix: str = "x") -> tuple[Poly, ...]:
    """p_0..p_n: the sign-stripped coefficients of prod_i (x0i*X - x1i*Y)."""
    if n < 1:
        raise AlgebraError("ehsp needs n >= 1")
    base = pair_table(n, prefix)
    F = expand_linear_product(n, prefix)
    big = F.table
    ix, iy = big.index("X"), big.index("Y")
    parts: list[dict] = [{} for _ in range(n + 1)]
    for e, c in F.terms.items():
        k = e[iy]
        assert e[ix] == n - k
        parts[k][e[: len(base)]] = c if k % 2 == 0 else -c
    return tuple(Poly(base, QQ, t) for t in parts)


def elementary_symmetric(names: Sequence[str], table: VarTable, ring: Ring = QQ) -> list[Poly]:
    """s_0 = 1, s_1, ..., s_k in the given variables."""
    s = [Poly.const(1, table, ring)]
    for v in names:
        t = Poly.var(v, table, ring)
        s = [a + (t * b if b is not None else 0) for a, b in zip(s + [Poly.zero(table, ring)], [None] + s)]
    return s


def _coefficient_recurrence(pts, sign: int, ring: Ring) -> list:
    # coefficients of prod (x0 X + sign * x1 Y), highest power of X first
    red = ring.reduce
    c = [ring(1)]
    for x0, x1 in pts:
        x1 = sign * x1
        c = [red(a * x0 + b * x1) for a, b in zip(c + [0], [0] + c)]
    return c


def viete(pts: Sequence, ring: Ring | None = None) -> ProjPoint:
    """(p_0 : ... : p_n) evaluated at a tuple of P^1 points."""
    pts = list(pts)
    if not pts:
        raise AlgebraError("viete needs at least one point")
    ring = ring or getattr(pts[0], "ring", QQ)
    coords = _coefficient_recurrence([tuple(map(ring, p)) for p in pts], 1, ring)
    assert any(c != 0 for c in coords), "product of nonzero linear forms vanished"
    return ProjPoint(coords, ring)


def form_of_tuple(pts: Sequence, ring: Ring | None = None) -> BinaryForm:
    """prod_i (x0i*X - x1i*Y) as a binary form."""
    pts = list(pts)
    if not pts:
        raise AlgebraError("form_of_tuple needs at least one point")
    ring = ring or getattr(pts[0], "ring", QQ)
    return BinaryForm(_coefficient_recurrence([tuple(map(ring, p)) for p in pts], -1, ring), ring)


def is_symmetric(p: Poly, n: int, prefix: str = "x") -> bool:
    """Invariance under all adjacent transpositions of the variable pairs."""
    if n == 1:
        for a in "01":
            p.table.index(f"{prefix}{a}1")
        return True
    return all(sn_act(t, p, prefix) == p for t in adjacent_transpositions(n))


def ehsp_table(n: int, prefix: str = "P") -> VarTable:
    names = tuple(f"{prefix}{k}" for k in range(n + 1))
    return VarTable(names, ((prefix, names),))


def _compositions(total: int, parts: int):
    # exponent vectors of length `parts` summing to `total`
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def expand_in_ehsp(q: Poly, n: int, prefix: str = "x") -> Poly:
    """Substitute P_k -> p_k, giving a polynomial in the x-alphabet."""
    ps = ehsp(n, prefix)
    subst = {f"P{k}": ps[k] for k in range(n + 1)}
    return q.change_ring(QQ).substitute(subst).change_ring(q.ring)


def express_in_ehsp(p: Poly, n: int, prefix: str = "x"):
    """Rewrite a symmetric polynomial in the abstract generators P0..Pn.

    Works piece by piece: a term whose pair-degrees are all equal to d lives
    in the span of the degree-d monomials in p_0..p_n.  Each piece is solved
    as a linear system.  Returns ``None`` when some piece is not in the span
    (the input was not symmetric).
    """
    ring = p.ring
    if not ring.is_field:
        raise AlgebraError(f"{ring.name} is not a field")
    base = pair_table(n, prefix)
    if p.table != base:
        extra = [v for v in p.variables() if v not in base]
        if extra:
            raise AlgebraError(f"variables {extra} are outside the {prefix}-alphabet for n={n}")
        p = p.change_table(base)
    target_table = ehsp_table(n)
    pieces: dict[int, dict] = {}
    for e, c in p.terms.items():
        degs = {e[2 * i] + e[2 * i + 1] for i in range(n)}
        if len(degs) != 1:
            raise AlgebraError("input is not multihomogeneous of equal degree in every pair")
        pieces.setdefault(degs.pop(), {})[e] = c

    ps = [q.change_ring(ring) for q in ehsp(n, prefix)]
    result = Poly.zero(target_table, ring)
    for d, terms in sorted(pieces.items()):
        monos = list(_compositions(d, n + 1))
        expansions = []
        for mono in monos:
            acc = Poly.const(1, base, ring)
            for k, a in enumerate(mono):
                if a:
                    acc = acc * ps[k] ** a
            expansions.append(acc)
        support = sorted({e for q in expansions for e in q.terms} | set(terms))
        index = {e: r for r, e in enumerate(support)}
        A = [[ring(0)] * len(monos) for _ in support]
        for col, q in enumerate(expansions):
            for e, c in q.terms.items():
                A[index[e]][col] = c
        b = [terms.get(e, ring(0)) for e in support]
        if rank_over_field(A, ring) != len(monos):  # pragma: no cover - would contradict independence
            raise AssertionError(f"degree-{d} EHSP monomials are linearly dependent")
        x = solve_linear(A, b, ring)
        if x is None:
            return None
        result = result + Poly(target_table, ring, {mono: c for mono, c in zip(monos, x)})
    if expand_in_ehsp(result, n, prefix) != p:
        return None
    return result


def check_independence(n: int, trials: int, seed: int | None = None) -> bool:
    """Jacobian criterion: rank n+1 at some random rational point."""
    if n < 1 or trials < 1:
        raise AlgebraError("check_independence needs n >= 1 and trials >= 1")
    rng = random.Random(seed)
    ps = ehsp(n)
    names = pair_table(n).names
    J = jacobian(list(ps), list(names))
    for _ in range(trials):
        point = {v: Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for v in names}
        if rank_over_field(J.evaluate(point), QQ) == n + 1:
            return True
    return False


# ---------------------------------------------------------------------------
# Loci
# ---------------------------------------------------------------------------


def xnm_factors(n: int, m: int) -> list[tuple[Poly, int]]:
    """Factored defining polynomial of X_{n,m}: (x0i*y1j - x1i*y0j), exponent 1."""
    if n < 1 or m < 1:
        raise AlgebraError("X_{n,m} needs n, m >= 1")
    t = xy_table(n, m)
    out = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            f = Poly.var(f"x0{i}", t) * Poly.var(f"y1{j}", t) - Poly.var(f"x1{i}", t) * Poly.var(f"y0{j}", t)
            out.append((f, 1))
    return out


def xn_factors(n: int) -> list[tuple[Poly, int]]:
    """Factored defining polynomial of X_n: (x1i*x0j - x0i*x1j), exponent 2."""
    if n < 2:
        raise AlgebraError("X_n needs n >= 2")
    t = xy_table(n)
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        f = Poly.var(f"x1{i}", t) * Poly.var(f"x0{j}", t) - Poly.var(f"x0{i}", t) * Poly.var(f"x1{j}", t)
        out.append((f, 2))
    return out


def _expand(factors) -> Poly:
    acc = None
    for f, k in factors:
        acc = f**k if acc is None else acc * f**k
    return acc


def xnm_defining_poly(n: int, m: int) -> Poly:
    return _expand(xnm_factors(n, m))


def xn_defining_poly(n: int) -> Poly:
    return _expand(xn_factors(n))


def _tuple_assignment(xs, ys=()) -> dict:
    a = {}
    for i, (x0, x1) in enumerate(xs, 1):
        a[f"x0{i}"], a[f"x1{i}"] = x0, x1
    for j, (y0, y1) in enumerate(ys, 1):
        a[f"y0{j}"], a[f"y1{j}"] = y0, y1
    return a


def _ring_of(*pts):
    for p in pts:
        if isinstance(p, ProjPoint):
            return p.ring
    return QQ


def _factored_value(factors, assignment, ring):
    acc = ring(1)
    for f, k in factors:
        acc = ring.reduce(acc * f.evaluate(assignment) ** k)
    return acc


@lru_cache(maxsize=None)
def _xnm_in(n, m, ring):
    return [(f.change_ring(ring), k) for f, k in xnm_factors(n, m)]


@lru_cache(maxsize=None)
def _xn_in(n, ring):
    return [(f.change_ring(ring), k) for f, k in xn_factors(n)]


@lru_cache(maxsize=None)
def _res_in(n, m, ring):
    return resultant_symbolic(n, m).change_ring(ring)


@lru_cache(maxsize=None)
def _disc_in(n, ring):
    return discriminant_symbolic(n).change_ring(ring)


def member_xnm(xs: Sequence, ys: Sequence) -> bool:
    ring = _ring_of(*xs, *ys)
    value = _factored_value(_xnm_in(len(xs), len(ys), ring), _tuple_assignment(xs, ys), ring)
    return value == 0


def member_xn(xs: Sequence) -> bool:
    ring = _ring_of(*xs)
    return _factored_value(_xn_in(len(xs), ring), _tuple_assignment(xs), ring) == 0


def member_rnm(pv: ProjPoint, pw: ProjPoint) -> bool:
    """Does Res vanish at (v, w) = (pv, pw)?"""
    n, m = len(pv) - 1, len(pw) - 1
    ring = _ring_of(pv, pw)
    a = {f"v{k}": c for k, c in enumerate(pv)}
    a.update({f"w{k}": c for k, c in enumerate(pw)})
    return _res_in(n, m, ring).evaluate(a) == 0


def member_dn(pp: ProjPoint) -> bool:
    """Does the discriminant vanish at p = pp?"""
    n = len(pp) - 1
    ring = _ring_of(pp)
    return _disc_in(n, ring).evaluate({f"p{k}": c for k, c in enumerate(pp)}) == 0

