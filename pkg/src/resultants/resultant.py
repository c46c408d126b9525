"""Resultants and discriminants of binary forms.

A binary form of degree n is stored by its coefficient vector
``(c0, ..., cn)``, meaning ``c0*X^n + c1*X^(n-1)*Y + ... + cn*Y^n``, or
equivalently ``f(Z) = c0*Z^n + ... + cn`` with ``Z = X/Y``.  Coefficients are
either ring scalars or Polys over a shared table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .core import QQ, AlgebraError, Poly, Ring, VarTable, exact_divide
from .linalg import Matrix, bareiss_det


class LeadingCoefficientZeroError(AlgebraError, ArithmeticError):
    """The discriminant formula divides by a leading coefficient that vanishes."""


@dataclass(frozen=True, init=False)
class BinaryForm:
    coeffs: tuple
    ring: Ring

    def __init__(self, coeffs: Sequence, ring: Ring | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise AlgebraError("a binary form needs at least one coefficient")
        polys = [c for c in coeffs if isinstance(c, Poly)]
        if polys:
            table, ring = polys[0].table, polys[0].ring
            coeffs = tuple(c if isinstance(c, Poly) else Poly.const(c, table, ring) for c in coeffs)
            for c in coeffs:
                polys[0]._coerce(c)
        else:
            ring = ring or QQ
            coeffs = tuple(ring(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "ring", ring)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def symbolic(self) -> bool:
        return isinstance(self.coeffs[0], Poly)

    @property
    def table(self) -> VarTable | None:
        return self.coeffs[0].table if self.symbolic else None

    def is_zero(self) -> bool:
        if self.symbolic:
            return all(c.is_zero() for c in self.coeffs)
        return all(c == 0 for c in self.coeffs)

    @classmethod
    def generic(cls, n: int, prefix: str, table: VarTable | None = None, ring: Ring = QQ) -> "BinaryForm":
        """The form with indeterminate coefficients ``prefix0 .. prefix<n>``."""
        names = [f"{prefix}{k}" for k in range(n + 1)]
        if table is None:
            table = VarTable(tuple(names), ((prefix, tuple(names)),))
        return cls([Poly.var(v, table, ring) for v in names])

    def derivative(self) -> "BinaryForm":
        """d/dZ of the dehomogenized form, as a form of degree n-1."""
        n = self.degree
        if n == 0:
            raise AlgebraError("derivative of a degree-0 form")
        return BinaryForm([c * (n - k) for k, c in enumerate(self.coeffs[:-1])], self.ring)

    def scale(self, lam) -> "BinaryForm":
        return BinaryForm([c * lam for c in self.coeffs], self.ring)

    def evaluate(self, x, y=1):
        """Value at the point (X:Y) = (x:y) for scalar forms."""
        n = self.degree
        red = self.ring.reduce
        return red(sum(c * x ** (n - k) * y**k for k, c in enumerate(self.coeffs)))

    def as_poly(self, table: VarTable, z: str = "Z", homogeneous: tuple[str, str] | None = None) -> Poly:
        """The form as a Poly in ``z`` (or in X, Y when ``homogeneous`` names them)."""
        n = self.degree
        out = Poly.zero(table, self.ring)
        for k, c in enumerate(self.coeffs):
            c = c.change_table(table) if isinstance(c, Poly) else Poly.const(c, table, self.ring)
            if homogeneous:
                X = Poly.var(homogeneous[0], table, self.ring)
                Y = Poly.var(homogeneous[1], table, self.ring)
                out = out + c * X ** (n - k) * Y**k
            else:
                out = out + c * Poly.var(z, table, self.ring) ** (n - k)
        return out


def form_from_poly(p: Poly, z: str = "Z", degree: int | None = None) -> BinaryForm:
    """Read a form off a polynomial in ``z`` with coefficients in the other variables."""
    parts = p.coefficients_in(z)
    top = max(parts) if parts else 0
    n = top if degree is None else degree
    if n < top:
        raise AlgebraError(f"polynomial has degree {top} in {z}, more than {n}")
    rest = tuple(v for v in p.table.names if v != z)
    sub = VarTable(rest)
    coeffs = []
    for k in range(n + 1):
        c = parts.get(n - k)
        coeffs.append(c.change_table(sub) if c is not None else Poly.zero(sub, p.ring))
    form = BinaryForm(coeffs)
    if not rest:
        return BinaryForm([c.constant_value() for c in coeffs], p.ring)
    return form


def form_from_homogeneous(p: Poly, x: str = "X", y: str = "Y", degree: int | None = None) -> BinaryForm:
    """Read a form off a homogeneous polynomial in ``x``, ``y``."""
    ix, iy = p.table.index(x), p.table.index(y)
    degs = {e[ix] + e[iy] for e in p.terms}
    if len(degs) > 1:
        raise AlgebraError(f"not homogeneous in {x}, {y}")
    n = degs.pop() if degs else (degree or 0)
    if degree is not None and degree != n:
        raise AlgebraError(f"form has degree {n}, expected {degree}")
    rest = tuple(v for v in p.table.names if v not in (x, y))
    sub = VarTable(rest)
    keep = [i for i, v in enumerate(p.table.names) if v not in (x, y)]
    parts: list[dict] = [{} for _ in range(n + 1)]
    for e, c in p.terms.items():
        parts[e[iy]][tuple(e[i] for i in keep)] = c
    coeffs = [Poly(sub, p.ring, t) for t in parts]
    if not rest:
        return BinaryForm([c.constant_value() for c in coeffs], p.ring)
    return BinaryForm(coeffs)


def _unify(f: BinaryForm, g: BinaryForm) -> tuple[BinaryForm, BinaryForm]:
    if f.symbolic == g.symbolic:
        if f.symbolic and f.table != g.table:
            raise AlgebraError("forms live over different variable tables")
        if f.ring != g.ring:
            raise AlgebraError(f"ring mismatch: {f.ring.name} vs {g.ring.name}")
        return f, g
    sym, other = (f, g) if f.symbolic else (g, f)
    lifted = BinaryForm([Poly.const(c, sym.table, sym.ring) for c in other.coeffs])
    return (sym, lifted) if f.symbolic else (lifted, sym)


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> Matrix:
    """m shifted rows of f's coefficients followed by n shifted rows of g's."""
    f, g = _unify(f, g)
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise AlgebraError("Sylvester matrix needs degrees n, m >= 1")
    size = n + m
    zero = Poly.zero(f.table, f.ring) if f.symbolic else f.ring(0)
    rows = []
    for i in range(m):
        rows.append([zero] * i + list(f.coeffs) + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + list(g.coeffs) + [zero] * (size - m - 1 - i))
    return Matrix(rows, f.ring)


def resultant(f: BinaryForm, g: BinaryForm):
    """Res(f, g): a Poly for symbolic forms, a ring scalar otherwise.

    Degree-0 convention: Res(c, g) = c^m and Res(f, c) = c^n.
    """
    f, g = _unify(f, g)
    n, m = f.degree, g.degree
    if n == 0 and m == 0:
        raise AlgebraError("resultant of two degree-0 forms is undefined")
    if n == 0:
        return _power(f.coeffs[0], m, f.ring)
    if m == 0:
        return _power(g.coeffs[0], n, g.ring)
    return bareiss_det(sylvester_matrix(f, g))


def _power(c, k, ring):
    return c**k if isinstance(c, Poly) else ring.reduce(c**k)


MAX_SYMBOLIC_DEGREE = 6


def vw_table(n: int, m: int) -> VarTable:
    v = tuple(f"v{k}" for k in range(n + 1))
    w = tuple(f"w{k}" for k in range(m + 1))
    return VarTable(v + w, (("v", v), ("w", w)))


@lru_cache(maxsize=None)
def resultant_symbolic(n: int, m: int) -> Poly:
    """Res(f_v, g_w) in the indeterminates v0..vn, w0..wm."""
    if not (1 <= n <= MAX_SYMBOLIC_DEGREE and 1 <= m <= MAX_SYMBOLIC_DEGREE):
        raise AlgebraError(f"symbolic resultant limited to 1 <= n, m <= {MAX_SYMBOLIC_DEGREE}")
    table = vw_table(n, m)
    f = BinaryForm.generic(n, "v", table)
    g = BinaryForm.generic(m, "w", table)
    return resultant(f, g)


def xy_table(n: int, m: int = 0) -> VarTable:
    """x01, x11, ..., x0n, x1n, y01, y11, ..., y0m, y1m with one block per pair."""
    xs = [(f"x0{i}", f"x1{i}") for i in range(1, n + 1)]
    ys = [(f"y0{j}", f"y1{j}") for j in range(1, m + 1)]
    names = tuple(v for pair in xs + ys for v in pair)
    blocks = [(f"x{i}", pair) for i, pair in enumerate(xs, 1)]
    blocks += [(f"y{j}", pair) for j, pair in enumerate(ys, 1)]
    blocks += [("x", tuple(v for p in xs for v in p)), ("y", tuple(v for p in ys for v in p))]
    return VarTable(names, tuple(blocks))


def res_product_form(xs: Sequence[Sequence], ys: Sequence[Sequence], ring: Ring = QQ):
    """prod_{i,j} (x1i*y0j - x0i*y1j) for raw (unnormalized) coordinate pairs."""
    red = ring.reduce
    acc = ring(1)
    for x0, x1 in (tuple(map(ring, p)) for p in xs):
        for y0, y1 in (tuple(map(ring, p)) for p in ys):
            acc = red(acc * (x1 * y0 - x0 * y1))
    return acc


def res_product_form_symbolic(n: int, m: int) -> Poly:
    table = xy_table(n, m)
    acc = Poly.const(1, table)
    for i in range(1, n + 1):
        x0, x1 = Poly.var(f"x0{i}", table), Poly.var(f"x1{i}", table)
        for j in range(1, m + 1):
            y0, y1 = Poly.var(f"y0{j}", table), Poly.var(f"y1{j}", table)
            acc = acc * (x1 * y0 - x0 * y1)
    return acc


@dataclass(frozen=True)
class RootData:
    """A leading coefficient and the roots of ``leading * prod(Z - t_i)``."""

    leading: object
    roots: tuple
    ring: Ring = QQ

    def __post_init__(self):
        object.__setattr__(self, "leading", self.ring(self.leading))
        object.__setattr__(self, "roots", tuple(self.ring(t) for t in self.roots))
        if self.leading == 0:
            raise AlgebraError("leading coefficient must be nonzero")

    def reconstruct(self) -> BinaryForm:
        red = self.ring.reduce
        coeffs = [self.leading]
        for t in self.roots:
            # multiply by (Z - t)
            coeffs = [red(a - t * b) for a, b in zip(coeffs + [0], [0] + coeffs)]
        return BinaryForm(coeffs, self.ring)


def disc_from_roots(rd: RootData):
    """leading^(2n-2) * prod_{i<j} (t_i - t_j)^2."""
    n = len(rd.roots)
    if n < 2:
        raise AlgebraError("discriminant needs at least two roots")
    red = rd.ring.reduce
    acc = red(rd.leading ** (2 * n - 2))
    for ti, tj in combinations(rd.roots, 2):
        acc = red(acc * (ti - tj) ** 2)
    return acc


def vt_table(n: int, lead: str = "v0", root: str = "t") -> VarTable:
    return VarTable((lead,) + tuple(f"{root}{i}" for i in range(1, n + 1)))


def disc_from_roots_symbolic(n: int) -> Poly:
    """v0^(2n-2) * prod_{i<j}(t_i - t_j)^2 in the variables v0, t1..tn."""
    if n < 2:
        raise AlgebraError("discriminant needs at least two roots")
    table = vt_table(n)
    v0 = Poly.var("v0", table)
    ts = [Poly.var(f"t{i}", table) for i in range(1, n + 1)]
    acc = v0 ** (2 * n - 2)
    for ti, tj in combinations(ts, 2):
        acc = acc * (ti - tj) ** 2
    return acc


def discriminant(f: BinaryForm):
    """Res(f, f') divided exactly by the leading coefficient."""
    n = f.degree
    if n < 2:
        raise AlgebraError("discriminant needs a form of degree >= 2")
    c0 = f.coeffs[0]
    if (c0.is_zero() if f.symbolic else c0 == 0):
        raise LeadingCoefficientZeroError("leading coefficient zero")
    r = resultant(f, f.derivative())
    if f.symbolic:
        return exact_divide(r, c0)
    return f.ring.exact_quo(r, c0)


MAX_DISC_DEGREE = 5


def p_table(n: int, prefix: str = "p") -> VarTable:
    names = tuple(f"{prefix}{k}" for k in range(n + 1))
    return VarTable(names, ((prefix, names),))


@lru_cache(maxsize=None)
def discriminant_symbolic(n: int) -> Poly:
    """The discriminant polynomial in p0..pn (degree 2n-2)."""
    if not 2 <= n <= MAX_DISC_DEGREE:
        raise AlgebraError(f"symbolic discriminant limited to 2 <= n <= {MAX_DISC_DEGREE}")
    return discriminant(BinaryForm.generic(n, "p", p_table(n)))


# ---------------------------------------------------------------------------
# gcd of binary forms over a field
# ---------------------------------------------------------------------------


def _strip(c: list, ring) -> list:
    # drop leading zeros of a highest-degree-first coefficient list
    i = 0
    while i < len(c) and c[i] == 0:
        i += 1
    return c[i:]


def _poly_rem(a: list, b: list, ring) -> list:
    red = ring.reduce
    a = list(a)
    inv = ring.inverse(b[0])
    while len(a) >= len(b) and a:
        q = red(a[0] * inv)
        for k in range(len(b)):
            a[k] = red(a[k] - q * b[k])
        a = _strip(a, ring)
    return a


def _monic(a: list, ring) -> list:
    inv = ring.inverse(a[0])
    return [ring.reduce(x * inv) for x in a]


def univariate_gcd(a: list, b: list, ring) -> list:
    """Monic gcd of coefficient lists (highest degree first); [] if both zero."""
    a, b = _strip(list(a), ring), _strip(list(b), ring)
    while b:
        a, b = b, _poly_rem(a, b, ring)
    return _monic(a, ring) if a else []


def y_power(f: BinaryForm):
    """Multiplicity of the point (1:0), i.e. the power of Y dividing f."""
    for k, c in enumerate(f.coeffs):
        if c != 0:
            return k
    return float("inf")


def gcd_binary_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Homogeneous gcd over a field, normalized to leading coefficient 1."""
    f, g = _unify(f, g)
    if f.symbolic:
        raise AlgebraError("gcd_binary_forms needs scalar coefficients")
    ring = f.ring
    if not ring.is_field:
        raise AlgebraError(f"{ring.name} is not a field")
    if f.is_zero() and g.is_zero():
        raise AlgebraError("gcd of two zero forms")
    e = min(y_power(f), y_power(g))
    d = univariate_gcd(f.coeffs, g.coeffs, ring)
    coeffs = [ring(0)] * e + d
    return BinaryForm(coeffs, ring)
