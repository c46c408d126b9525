"""Exact dense linear algebra over a coefficient ring or a polynomial ring."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .core import QQ, AlgebraError, InexactDivisionError, Poly, Ring, exact_divide


class Matrix:
    """Dense row-major matrix whose entries are all Polys or all ring scalars."""

    __slots__ = ("rows", "ring", "table", "symbolic")

    def __init__(self, rows: Iterable[Sequence], ring: Ring | None = None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise AlgebraError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise AlgebraError("ragged matrix rows")
        polys = [a for r in rows for a in r if isinstance(a, Poly)]
        if polys:
            table, pring = polys[0].table, polys[0].ring
            if ring is not None and ring != pring:
                raise AlgebraError(f"entries live over {pring.name}, not {ring.name}")
            ring = pring
            rows = [
                [a if isinstance(a, Poly) else Poly.const(a, table, ring) for a in r] for r in rows
            ]
            for r in rows:
                for a in r:
                    polys[0]._coerce(a)  # table/ring check
            self.table = table
            self.symbolic = True
        else:
            ring = ring or QQ
            rows = [[ring(a) for a in r] for r in rows]
            self.table = None
            self.symbolic = False
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.ring)

    def swap_rows(self, i: int, j: int) -> "Matrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix(rows, self.ring)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise AlgebraError(f"cannot multiply {self.shape} by {other.shape}")
        ops = _ops(self)
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                s = ops.zero
                for t in range(k):
                    s = ops.add(s, ops.mul(self.rows[i][t], other.rows[t][j]))
                row.append(s)
            out.append(row)
        return Matrix(out, self.ring)

    def evaluate(self, assignment: Mapping[str, object]) -> "Matrix":
        """Scalar matrix obtained by evaluating every Poly entry."""
        if not self.symbolic:
            return self
        return Matrix([[a.evaluate(assignment) for a in r] for r in self.rows], self.ring)

    def scalars(self) -> list[list]:
        """Entries as ring scalars; Poly entries must be constant."""
        if not self.symbolic:
            return self.tolist()
        return [[a.constant_value() for a in r] for r in self.rows]


class _ops:
    # uniform arithmetic for Poly and scalar entries
    def __init__(self, M: Matrix):
        ring = M.ring
        if M.symbolic:
            self.zero = Poly.zero(M.table, ring)
            self.one = Poly.const(1, M.table, ring)
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.mul = lambda a, b: a * b
            self.div = exact_divide
            self.is_zero = lambda a: a.is_zero()
            self.neg = lambda a: -a
        else:
            red = ring.reduce
            self.zero = ring(0)
            self.one = ring(1)
            self.add = lambda a, b: red(a + b)
            self.sub = lambda a, b: red(a - b)
            self.mul = lambda a, b: red(a * b)
            self.div = ring.exact_quo
            self.is_zero = lambda a: a == 0
            self.neg = lambda a: red(-a)


def bareiss_det(M: Matrix):
    """Determinant by fraction-free elimination.

    The pivot for column k is the first row at or below k with a nonzero
    entry there; each row swap flips the sign.  Returns a Poly for symbolic
    matrices and a ring scalar otherwise.
    """
    n, m = M.shape
    if n != m:
        raise AlgebraError(f"determinant of a non-square {n}x{m} matrix")
    ops = _ops(M)
    a = [list(r) for r in M.rows]
    sign = 1
    prev = ops.one
    for k in range(n - 1):
        if ops.is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not ops.is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ops.zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = ops.sub(ops.mul(pivot, row_i[j]), ops.mul(aik, row_k[j]))
                try:
                    row_i[j] = ops.div(num, prev)
                except InexactDivisionError as exc:  # pragma: no cover - would be a bug
                    raise AssertionError(f"Bareiss division not exact at step {k}") from exc
            row_i[k] = ops.zero
        prev = pivot
    det = a[n - 1][n - 1]
    return ops.neg(det) if sign < 0 else det


MAX_COFACTOR_DIM = 8


def cofactor_det(M: Matrix):
    """Determinant by Laplace expansion along the first row (oracle, dim <= 8)."""
    n, m = M.shape
    if n != m:
        raise AlgebraError(f"determinant of a non-square {n}x{m} matrix")
    if n > MAX_COFACTOR_DIM:
        raise AlgebraError(f"cofactor expansion limited to dimension {MAX_COFACTOR_DIM}")
    ops = _ops(M)
    rows = M.rows
    memo: dict[tuple[int, ...], object] = {}

    def minor(row: int, cols: tuple[int, ...]):
        # determinant of rows[row:] restricted to cols
        if len(cols) == 1:
            return rows[row][cols[0]]
        if cols in memo:
            return memo[cols]
        total = ops.zero
        for pos, c in enumerate(cols):
            entry = rows[row][c]
            if ops.is_zero(entry):
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = ops.mul(entry, sub)
            total = ops.sub(total, term) if pos % 2 else ops.add(total, term)
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def jacobian(ps: Sequence[Poly], names: Sequence[str]) -> Matrix:
    if len(set(names)) != len(names):
        raise AlgebraError("jacobian variables must be distinct")
    return Matrix([[p.derivative(v) for v in names] for p in ps])


def _field_rows(M, ring):
    if isinstance(M, Matrix):
        ring = ring or M.ring
        rows = M.scalars()
    else:
        ring = ring or QQ
        rows = [list(r) for r in M]
    if not ring.is_field:
        raise AlgebraError(f"{ring.name} is not a field")
    return [[ring(a) for a in r] for r in rows], ring


def _echelon(rows, ring):
    """Reduced row echelon form in place; returns pivot columns."""
    red = ring.reduce
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inverse(rows[r][c])
        rows[r] = [red(x * inv) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [red(x - f * y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank_over_field(M, ring: Ring | None = None) -> int:
    rows, ring = _field_rows(M, ring)
    return len(_echelon(rows, ring))


def solve_linear(A, b: Sequence, ring: Ring | None = None):
    """One solution of ``A x = b`` with free variables set to zero, or ``None``."""
    rows, ring = _field_rows(A, ring)
    if len(b) != len(rows):
        raise AlgebraError(f"right-hand side has {len(b)} entries for {len(rows)} rows")
    ncols = len(rows[0])
    aug = [r + [ring(x)] for r, x in zip(rows, b)]
    pivots = _echelon(aug, ring)
    if ncols in pivots:
        return None
    x = [ring(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return x
