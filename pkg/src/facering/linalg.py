"""Exact dense linear algebra over the rationals and prime fields.

Rational matrices are eliminated fraction-free (Bareiss) after clearing
denominators row by row, which keeps every intermediate entry an integer.
Prime-field matrices are reduced with vectorized modular row operations on
int64 numpy arrays.  No floating point is used anywhere.

All pivot choices are "first nonzero", so every result (kernel bases,
class representatives, ...) is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if p < 2:
        return False
    for q in _MR_WITNESSES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """The coefficient field: the rationals (p is None) or F_p for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not is_prime(p):
                raise ValueError(f"modulus {p!r} is not prime")
            if p >= 2**31:
                raise ValueError("prime moduli above 2^31 are not supported")
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("FieldSpec is immutable")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec(None)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Parse "q" or "fp:<prime>"."""
        if text == "q":
            return FieldSpec(None)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return FieldSpec(p)
        raise ValueError(f"bad field spec {text!r} (expected 'q' or 'fp:<prime>')")

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __str__(self):
        return "q" if self.p is None else f"fp:{self.p}"

    def __repr__(self):
        return f"FieldSpec({self.p!r})"


QQ = FieldSpec(None)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def _residue(x, p: int) -> int:
    """Exact image of an int or Fraction in F_p."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator % p
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


class Matrix:
    """Immutable dense matrix with exact entries.

    Over Q the entries are ints or Fractions; over F_p they are residues in
    [0, p).  Rows with no entries still carry an explicit column count.
    """

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        if field.p is not None:
            p = field.p
            rows = [[_residue(x, p) for x in r] for r in rows]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return Matrix(field, [[0] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        return Matrix(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_columns(field: FieldSpec, columns, nrows: int) -> "Matrix":
        cols = [list(c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length mismatch")
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return Matrix(field, rows, len(cols))

    # -- access ------------------------------------------------------------

    def row(self, i: int) -> list:
        return list(self._rows[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self._rows]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "Matrix":
        rows = [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.field, rows, self.nrows)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx, col_idx = list(row_idx), list(col_idx)
        rows = [[self._rows[i][j] for j in col_idx] for i in row_idx]
        return Matrix(self.field, rows, len(col_idx))

    def is_zero(self) -> bool:
        return all(not x for r in self._rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field or self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        if self.field.is_rational:
            return all(
                Fraction(a) == Fraction(b)
                for ra, rb in zip(self._rows, other._rows)
                for a, b in zip(ra, rb)
            )
        return self._rows == other._rows

    def __hash__(self):
        if self.field.is_rational:
            body = tuple(tuple(Fraction(x) for x in r) for r in self._rows)
        else:
            body = tuple(tuple(r) for r in self._rows)
        return hash((self.field, self.nrows, self.ncols, body))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    # -- arithmetic ---------------------------------------------------------

    def scaled(self, c) -> "Matrix":
        return Matrix(self.field, [[c * x for x in r] for r in self._rows], self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scaled(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matmul")
        p = self.field.p
        if p is not None and self.nrows and other.ncols:
            if p * p * max(self.ncols, 1) < 2**62:
                a = self._np()
                b = other._np()
                return Matrix._from_np(self.field, (a @ b) % p, other.ncols)
        bcols = [other.column(j) for j in range(other.ncols)]
        rows = []
        for r in self._rows:
            rows.append([sum(x * y for x, y in zip(r, c) if x and y) for c in bcols])
        return Matrix(self.field, rows, other.ncols)

    def matvec(self, v) -> list:
        v = list(v)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum(x * y for x, y in zip(r, v) if x and y) for r in self._rows]

    # -- numpy bridge (prime fields) ----------------------------------------

    def _np(self) -> np.ndarray:
        return np.array(self._rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    @staticmethod
    def _from_np(field: FieldSpec, a: np.ndarray, ncols: int | None = None) -> "Matrix":
        if ncols is None:
            ncols = a.shape[1]
        return Matrix(field, [list(map(int, row)) for row in a], ncols)


def hstack(*mats: Matrix) -> Matrix:
    mats = [m for m in mats]
    if not mats:
        raise ValueError("hstack of nothing")
    field, nrows = mats[0].field, mats[0].nrows
    for m in mats:
        if m.field != field or m.nrows != nrows:
            raise ValueError("hstack shape/field mismatch")
    rows = [[x for m in mats for x in m._rows[i]] for i in range(nrows)]
    return Matrix(field, rows, sum(m.ncols for m in mats))


def vstack(*mats: Matrix) -> Matrix:
    mats = [m for m in mats]
    if not mats:
        raise ValueError("vstack of nothing")
    field, ncols = mats[0].field, mats[0].ncols
    for m in mats:
        if m.field != field or m.ncols != ncols:
            raise ValueError("vstack shape/field mismatch")
    rows = [r for m in mats for r in m._rows]
    return Matrix(field, rows, ncols)


# ---------------------------------------------------------------------------
# rational engine (fraction-free)
# ---------------------------------------------------------------------------


def _q_int_rows(rows) -> list[list[int]]:
    """Scale each row to integer entries and strip the content."""
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        ints = [int(x * den) for x in r] if den != 1 else [int(x) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def _q_echelon(rows: list[list[int]], pivot_cols: int):
    """Bareiss forward elimination in place; returns (rows, pivot column list).

    Row k of the result has its pivot in column pivots[k].  Row operations are
    scalings and eliminations only, so row space and null space are preserved.
    """
    m = len(rows)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        k = None
        for k2 in range(r, m):
            if rows[k2][c]:
                k = k2
                break
        if k is None:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        prow = rows[r]
        piv = prow[c]
        for k2 in range(r + 1, m):
            row = rows[k2]
            f = row[c]
            if f:
                rows[k2] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
            elif piv != prev:
                rows[k2] = [piv * x // prev if x else 0 for x in row]
        pivots.append(c)
        prev = piv
        r += 1
    return rows, pivots


def _q_clear_column(vec: list[Fraction]) -> list[int]:
    den = 1
    for x in vec:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _q_kernel_columns(rows, pivots, ncols) -> list[list[int]]:
    pivset = set(pivots)
    cols = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v: list = [0] * ncols
        v[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = rows[r]
            s = sum(row[j] * v[j] for j in range(c + 1, ncols) if v[j])
            v[c] = Fraction(-s, row[c]) if s else Fraction(0)
        cols.append(_q_clear_column([Fraction(x) for x in v]))
    return cols


# ---------------------------------------------------------------------------
# prime-field engine (numpy)
# ---------------------------------------------------------------------------


def _p_rref(a: np.ndarray, p: int, pivot_cols: int):
    """Gauss-Jordan mod p; returns (rref array, pivot column list)."""
    R = a.copy()
    m = R.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = R[r] * inv % p
        col = R[:, c].copy()
        col[r] = 0
        touched = np.nonzero(col)[0]
        if touched.size:
            R[touched] = (R[touched] - np.outer(col[touched], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def _p_kernel_columns(R: np.ndarray, pivots, ncols, p) -> list[list[int]]:
    pivset = set(pivots)
    cols = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [0] * ncols
        v[fc] = 1
        for r, c in enumerate(pivots):
            v[c] = int(-R[r, fc]) % p
        cols.append(v)
    return cols


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _echelon_pivots(M: Matrix) -> list[int]:
    if M.nrows == 0 or M.ncols == 0:
        return []
    if M.field.is_rational:
        _, pivots = _q_echelon(_q_int_rows(M._rows), M.ncols)
    else:
        _, pivots = _p_rref(M._np(), M.field.p, M.ncols)
    return pivots


def rank(M: Matrix) -> int:
    return len(_echelon_pivots(M))


def kernel_basis(M: Matrix) -> Matrix:
    """Columns span ker M (as a subspace of the column-index space)."""
    n = M.ncols
    if n == 0:
        return Matrix(M.field, [], 0)
    if M.nrows == 0:
        return Matrix.identity(M.field, n)
    if M.field.is_rational:
        rows, pivots = _q_echelon(_q_int_rows(M._rows), n)
        cols = _q_kernel_columns(rows, pivots, n)
    else:
        R, pivots = _p_rref(M._np(), M.field.p, n)
        cols = _p_kernel_columns(R, pivots, n, M.field.p)
    return Matrix.from_columns(M.field, cols, n)


def image_basis(M: Matrix) -> Matrix:
    """A maximal independent subset of the columns of M, in column order."""
    pivots = _echelon_pivots(M)
    return Matrix.from_columns(M.field, [M.column(j) for j in pivots], M.nrows)


def independent_column_indices(base: Matrix, extra: Matrix) -> list[int]:
    """Indices of columns of `extra` that extend span(base) to span(base)+span(extra)."""
    if base.nrows != extra.nrows or base.field != extra.field:
        raise ValueError("shape/field mismatch")
    pivots = _echelon_pivots(hstack(base, extra)) if base.ncols else _echelon_pivots(extra)
    offset = base.ncols
    return [c - offset for c in pivots if c >= offset]


def solve(M: Matrix, b) -> list | None:
    """One solution of M x = b (free variables set to zero), or None."""
    b = list(b)
    if len(b) != M.nrows:
        raise ValueError("rhs length mismatch")
    if M.nrows == 0:
        return [0] * M.ncols
    aug = hstack(M, Matrix.from_columns(M.field, [b], M.nrows))
    n = M.ncols
    if M.field.is_rational:
        rows, pivots = _q_echelon(_q_int_rows(aug._rows), n)
        for r in range(len(pivots), len(rows)):
            if rows[r][n]:
                return None
        x: list = [0] * n
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = rows[r]
            s = sum(row[j] * x[j] for j in range(c + 1, n) if x[j])
            x[c] = Fraction(row[n] - s, row[c])
        return x
    p = M.field.p
    R, pivots = _p_rref(aug._np(), p, n)
    for r in range(len(pivots), R.shape[0]):
        if R[r, n]:
            return None
    x = [0] * n
    for r, c in enumerate(pivots):
        x[c] = int(R[r, n])
    return x


class Solver:
    """Reusable solver for M x = b: one elimination, many right-hand sides."""

    def __init__(self, M: Matrix):
        self.field = M.field
        self.nrows = M.nrows
        self.ncols = M.ncols
        if M.nrows == 0:
            self.pivots: list[int] = []
            self._transform = []
            return
        aug = hstack(M, Matrix.identity(M.field, M.nrows))
        if M.field.is_rational:
            rows, pivots = _q_echelon(_q_int_rows(aug._rows), M.ncols)
            frac_rows = [[Fraction(x) for x in r] for r in rows]
            for r in range(len(pivots) - 1, -1, -1):
                c = pivots[r]
                piv = frac_rows[r][c]
                if piv != 1:
                    frac_rows[r] = [x / piv for x in frac_rows[r]]
                for r2 in range(r):
                    f = frac_rows[r2][c]
                    if f:
                        frac_rows[r2] = [a - f * b for a, b in zip(frac_rows[r2], frac_rows[r])]
            self.pivots = pivots
            self._transform = [row[M.ncols:] for row in frac_rows]
        else:
            R, pivots = _p_rref(aug._np(), M.field.p, M.ncols)
            self.pivots = pivots
            self._transform = [[int(x) for x in row[M.ncols:]] for row in R]

    def solve(self, b) -> list | None:
        b = list(b)
        if len(b) != self.nrows:
            raise ValueError("rhs length mismatch")
        if self.nrows == 0:
            return [0] * self.ncols
        y = [sum(t * v for t, v in zip(row, b) if t and v) for row in self._transform]
        if self.field.p is not None:
            y = [v % self.field.p for v in y]
        for r in range(len(self.pivots), self.nrows):
            if y[r]:
                return None
        x: list = [0] * self.ncols
        for r, c in enumerate(self.pivots):
            x[c] = y[r]
        return x


def subspace_intersection(bases: list[Matrix]) -> Matrix:
    """Basis of the intersection of the column spans, all in the same ambient space."""
    if not bases:
        raise ValueError("intersection of an empty list")
    field, n = bases[0].field, bases[0].nrows
    for B in bases:
        if B.field != field or B.nrows != n:
            raise ValueError("ambient space mismatch")
    cur = image_basis(bases[0])
    for B in bases[1:]:
        if cur.ncols == 0:
            break
        K = kernel_basis(hstack(cur, -B))
        if K.ncols == 0:
            return Matrix(field, [[] for _ in range(n)], 0)
        X = Matrix(field, K._rows[: cur.ncols], K.ncols)
        cur = image_basis(cur @ X)
    return cur


def quotient_dim(ambient_basis: Matrix, sub_basis: Matrix) -> int:
    """dim(span ambient / span sub); errors if sub is not inside ambient."""
    if ambient_basis.nrows != sub_basis.nrows or ambient_basis.field != sub_basis.field:
        raise ValueError("ambient space mismatch")
    ra = rank(ambient_basis)
    if rank(hstack(ambient_basis, sub_basis)) != ra:
        raise ValueError("sub_basis is not contained in the ambient span")
    return ra - rank(sub_basis)
