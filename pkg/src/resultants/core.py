"""Exact coefficient rings and sparse multivariate polynomials.

Scalars are plain Python values.  Rationals are ``int`` or
``fractions.Fraction``; integers and prime-field elements are ``int``, the
latter kept in ``[0, p)``.  A ring object carries the arithmetic rules; a :class:`Poly` carries
its ring and its :class:`VarTable`.
"""

from __future__ import annotations

import heapq
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Sequence

MINUS_INFINITY = float("-inf")  # degree of the zero polynomial


class AlgebraError(ValueError):
    """Base class for errors raised by this package's algebra routines."""


class RingMismatchError(AlgebraError):
    pass


class TableMismatchError(AlgebraError):
    pass


class UnknownVariableError(AlgebraError, KeyError):
    def __str__(self) -> str:  # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class InexactDivisionError(AlgebraError, ArithmeticError):
    """Raised when a claimed exact division leaves a remainder."""


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


class Ring:
    """Exact scalar arithmetic.  Subclasses are immutable and hashable."""

    name: str = "?"
    is_field: bool = False

    def __call__(self, value) -> int | Fraction:
        raise NotImplementedError

    def reduce(self, value):
        """Canonical representative of a natively computed value."""
        return value

    def exact_quo(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        if not self.is_field:
            raise AlgebraError(f"{self.name} is not a field")
        return self.exact_quo(1, a)

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)


def _native(value):
    """Map foreign exact numbers (numpy, gmpy2, sympy) to int or Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Fraction, str)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    return value


@dataclass(frozen=True)
class RationalField(Ring):
    name: str = field(default="QQ", init=False)
    is_field: bool = field(default=True, init=False)

    def __call__(self, value):
        value = _native(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.reduce(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to an exact rational")

    def reduce(self, value):
        if type(value) is Fraction and value.denominator == 1:
            return value.numerator
        return value

    def exact_quo(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self.reduce(Fraction(a) / b)


@dataclass(frozen=True)
class IntegerRing(Ring):
    name: str = field(default="ZZ", init=False)

    def __call__(self, value):
        value = _native(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise AlgebraError(f"{value} is not an integer")
            return value.numerator
        if isinstance(value, str):
            return int(value)
        raise TypeError(f"{value!r} is not an integer")

    def exact_quo(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{a} is not divisible by {b} in ZZ")
        return q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField(Ring):
    """The field F_p for an odd prime ``p < 2**31``."""

    p: int
    is_field: bool = field(default=True, init=False)

    def __post_init__(self):
        if not (isinstance(self.p, int) and 2 < self.p < 2**31 and is_prime(self.p)):
            raise AlgebraError(f"modulus must be an odd prime below 2^31, got {self.p!r}")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def __call__(self, value):
        value = _native(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes modulo {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to {self.name}")

    def reduce(self, value):
        return value % self.p

    def exact_quo(self, a, b):
        b %= self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a * pow(b, -1, self.p) % self.p


QQ = RationalField()
ZZ = IntegerRing()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# Variable tables and monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names, optionally grouped into named blocks.

    Two tables are equal when their names agree; blocks are metadata used by
    :func:`multidegree`.
    """

    names: tuple[str, ...]
    blocks: tuple[tuple[str, tuple[str, ...]], ...] = field(default=(), compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate variable names in {names}")
        blocks = self.blocks
        if isinstance(blocks, Mapping):
            blocks = tuple(blocks.items())
        blocks = tuple((str(b), tuple(vs)) for b, vs in blocks)
        for bname, vs in blocks:
            for v in vs:
                if v not in names:
                    raise UnknownVariableError(f"block {bname!r} names unknown variable {v!r}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def block(self, name: str) -> tuple[str, ...]:
        for bname, vs in self.blocks:
            if bname == name:
                return vs
        raise AlgebraError(f"unknown block {name!r}")

    def extend(self, names: Iterable[str], blocks=()) -> "VarTable":
        """A table with ``names`` appended (already present names are kept once)."""
        new = list(self.names) + [n for n in names if n not in self._index]
        return VarTable(tuple(new), self.blocks + tuple(dict(blocks).items()))


EMPTY_TABLE = VarTable(())

Monomial = tuple  # tuple[int, ...], indexed by VarTable position


def grlex_key(exps: Sequence[int]):
    """Sort key putting the graded-lex largest monomial first."""
    return (-sum(exps), tuple(-e for e in exps))


@total_ordering
class _Desc:
    # heap helper: orders monomials so that the grlex-largest pops first
    __slots__ = ("key", "exps")

    def __init__(self, exps):
        self.exps = exps
        self.key = grlex_key(exps)

    def __lt__(self, other):
        return self.key < other.key

    def __eq__(self, other):
        return self.key == other.key


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Immutable sparse polynomial over a ring, in the variables of a table.

    Terms are stored as a map from exponent tuples to nonzero coefficients.
    Iteration and printing follow graded-lex order.
    """

    __slots__ = ("table", "ring", "_terms", "_hash")

    def __init__(self, table: VarTable, ring: Ring = QQ, terms: Mapping | Iterable = ()):
        self.table = table
        self.ring = ring
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        nvars = len(table)
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise AlgebraError(f"monomial {exps} does not fit a table of {nvars} variables")
            if any(e < 0 for e in exps):
                raise AlgebraError(f"negative exponent in {exps}")
            c = ring(c) + clean.get(exps, 0)
            c = ring.reduce(c)
            if c == 0:
                clean.pop(exps, None)
            else:
                clean[exps] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table, ring, terms: dict) -> "Poly":
        # terms must already be canonical: reduced, no zero coefficients
        p = object.__new__(cls)
        p.table = table
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_native(cls, table, ring, acc: dict) -> "Poly":
        out = {}
        for k, c in acc.items():
            c = ring.reduce(c)
            if c != 0:
                out[k] = c
        return cls._raw(table, ring, out)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable = EMPTY_TABLE, ring: Ring = QQ) -> "Poly":
        return cls._raw(table, ring, {})

    @classmethod
    def const(cls, value, table: VarTable = EMPTY_TABLE, ring: Ring = QQ) -> "Poly":
        c = ring(value)
        return cls._raw(table, ring, {(0,) * len(table): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str, table: VarTable, ring: Ring = QQ) -> "Poly":
        exps = [0] * len(table)
        exps[table.index(name)] = 1
        return cls._raw(table, ring, {tuple(exps): ring(1)})

    @classmethod
    def gens(cls, table: VarTable, ring: Ring = QQ) -> list["Poly"]:
        return [cls.var(n, table, ring) for n in table.names]

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, object]]:
        """(exponents, coefficient) pairs in graded-lex order, largest first."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if not self.is_constant():
            raise AlgebraError("polynomial is not constant")
        return self._terms.get((0,) * len(self.table), 0)

    def degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self._terms)

    def degree_in(self, name: str):
        i = self.table.index(name)
        if not self._terms:
            return MINUS_INFINITY
        return max(e[i] for e in self._terms)

    def variables(self) -> list[str]:
        """Names of variables that actually occur."""
        used = [False] * len(self.table)
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return [n for n, u in zip(self.table.names, used) if u]

    def leading_term(self):
        if not self._terms:
            raise AlgebraError("zero polynomial has no leading term")
        return min(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def coefficients_in(self, name: str) -> dict[int, "Poly"]:
        """Split as a polynomial in ``name``: exponent -> coefficient Poly (same table)."""
        i = self.table.index(name)
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly._raw(self.table, self.ring, t) for k, t in parts.items()}

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return (
                self.ring == other.ring
                and self.table == other.table
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == self._coerce(other)
            except (TypeError, ZeroDivisionError):
                return False
        return NotImplemented

    def __repr__(self) -> str:
        from .parser import format_poly  # parser depends on core

        return f"Poly({format_poly(self)!r}, {self.ring.name})"

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
            if other.table != self.table:
                raise TableMismatchError(
                    f"variable table mismatch: {self.table.names} vs {other.table.names}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other, self.table, self.ring)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Poly._from_native(self.table, self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._from_native(self.table, self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) - c
        return Poly._from_native(self.table, self.ring, acc)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                acc[e] = get(e, 0) + ca * cb
        return Poly._from_native(self.table, self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1, self.table, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        c = self.ring(c)
        return Poly._from_native(self.table, self.ring, {e: v * c for e, v in self._terms.items()})

    # -- conversions --------------------------------------------------------

    def change_ring(self, ring: Ring) -> "Poly":
        return Poly(self.table, ring, self._terms)

    def change_table(self, table: VarTable) -> "Poly":
        """Re-express over another table, matching variables by name."""
        if table == self.table:
            return Poly._raw(table, self.ring, self._terms)
        names = self.table.names
        used = self.variables()
        pos = [table.index(n) if n in used else None for n in names]
        out = {}
        size = len(table)
        for e, c in self._terms.items():
            new = [0] * size
            for i, k in enumerate(e):
                if k:
                    new[pos[i]] = k
            out[tuple(new)] = c
        return Poly._raw(table, self.ring, out)

    # -- calculus, evaluation, substitution ---------------------------------

    def derivative(self, name: str) -> "Poly":
        i = self.table.index(name)
        acc = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                acc[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Poly._from_native(self.table, self.ring, acc)

    def evaluate(self, assignment: Mapping[str, object]):
        values = []
        for n, used in zip(self.table.names, self._used_mask()):
            if n in assignment:
                values.append(self.ring(assignment[n]))
            elif used:
                raise UnknownVariableError(f"no value given for variable {n!r}")
            else:
                values.append(0)
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * v**k
            total += t
        return self.ring.reduce(total) if total != 0 else self.ring(0)

    __call__ = evaluate

    def _used_mask(self) -> list[bool]:
        used = [False] * len(self.table)
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return used

    def substitute(self, subst: Mapping[str, "Poly"], table: VarTable | None = None) -> "Poly":
        """Replace variables by polynomials.

        Images must share one table (``table`` if given, else the images'
        table, else this polynomial's).  Variables left alone are carried
        over by name, so they must exist in the target table too.
        """
        for n in subst:
            self.table.index(n)
        images = [q for q in subst.values() if isinstance(q, Poly)]
        if table is None:
            table = images[0].table if images else self.table
        for q in images:
            if q.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring.name} vs {q.ring.name}")
        target = {}
        for n in self.table.names:
            if n in subst:
                q = subst[n]
                target[n] = q.change_table(table) if isinstance(q, Poly) else Poly.const(q, table, self.ring)
            else:
                target[n] = None
        # Horner-style evaluation, one variable at a time, keeps products small
        return _horner(self, 0, target, table)


def _horner(p: Poly, start: int, target: dict, table: VarTable) -> Poly:
    names = p.table.names
    ring = p.ring
    if p.is_zero():
        return Poly.zero(table, ring)
    # skip variables that do not occur
    idx = start
    while idx < len(names) and all(e[idx] == 0 for e in p._terms):
        idx += 1
    if idx == len(names):
        return Poly.const(p.constant_value(), table, ring)
    name = names[idx]
    parts = p.coefficients_in(name)
    image = target[name]
    if image is None:
        image = Poly.var(name, table, ring)
    top = max(parts)
    acc = Poly.zero(table, ring)
    for k in range(top, -1, -1):
        acc = acc * image if k != top else acc
        if k in parts:
            acc = acc + _horner(parts[k], idx + 1, target, table)
    return acc


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + a._coerce(b)
    if op == "sub":
        return a - a._coerce(b)
    if op == "mul":
        return a * a._coerce(b)
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(p: Poly, assignment: Mapping[str, object]):
    return p.evaluate(assignment)


def poly_substitute(p: Poly, subst: Mapping[str, Poly], table: VarTable | None = None) -> Poly:
    return p.substitute(subst, table)


def derivative(p: Poly, name: str) -> Poly:
    return p.derivative(name)


def exact_divide(a: Poly, b: Poly) -> Poly:
    """Return ``q`` with ``a == b * q``; raise InexactDivisionError otherwise."""
    b = a._coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = a.ring
    if a.is_zero():
        return Poly.zero(a.table, ring)
    lt_exp, lt_c = b.leading_term()
    if len(b) == 1:
        out = {}
        for e, c in a._terms.items():
            d = tuple([x - y for x, y in zip(e, lt_exp)])
            if any(k < 0 for k in d):
                raise InexactDivisionError("monomial division leaves a remainder")
            out[d] = ring.exact_quo(c, lt_c)
        return Poly._raw(a.table, ring, out)

    rest = [(e, c) for e, c in b._terms.items() if e != lt_exp]
    rem = dict(a._terms)
    heap = [_Desc(e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    reduce = ring.reduce
    while heap:
        e = heapq.heappop(heap).exps
        c = rem.pop(e, None)
        if c is None:
            continue
        c = reduce(c)
        if c == 0:
            continue
        d = tuple([x - y for x, y in zip(e, lt_exp)])
        if any(k < 0 for k in d):
            raise InexactDivisionError("polynomial division leaves a remainder")
        qc = ring.exact_quo(c, lt_c)
        quot[d] = qc
        for eb, cb in rest:
            m = tuple([x + y for x, y in zip(d, eb)])
            if m in rem:
                rem[m] = rem[m] - qc * cb
            else:
                rem[m] = -qc * cb
                heapq.heappush(heap, _Desc(m))
    return Poly._raw(a.table, ring, quot)


def multidegree(p: Poly, block: str):
    """Common degree of all terms in a block's variables.

    Returns ``None`` when the terms disagree and ``MINUS_INFINITY`` for zero.
    """
    idx = [p.table.index(v) for v in p.table.block(block)]
    if p.is_zero():
        return MINUS_INFINITY
    degs = {sum(e[i] for i in idx) for e in p._terms}
    return degs.pop() if len(degs) == 1 else None


def make_table(*groups: Sequence[str] | str, blocks: Mapping[str, Sequence[str]] | None = None) -> VarTable:
    """Convenience constructor: ``make_table("x y z")`` or ``make_table(["v0", "v1"], ["w0"])``."""
    names: list[str] = []
    for g in groups:
        names.extend(g.split() if isinstance(g, str) else g)
    return VarTable(tuple(names), tuple((blocks or {}).items()))
