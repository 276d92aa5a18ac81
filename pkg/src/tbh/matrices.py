"""Dense square matrices over exact rationals or tolerance-compared floats.

Basis sizes stay in the low hundreds at desk scale, so a plain
tuple-of-tuples representation with generic arithmetic is all we need.
A matrix is *exact* when every entry is an int or Fraction; products and
sums of exact matrices stay exact, and equality of exact matrices is exact.
As soon as an Approx (or raw float) entry appears, comparisons switch to
the shared tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .scalars import Approx, approx_eq


def _as_number(x):
    return x.value if isinstance(x, Approx) else x


def _normalize_scalar(x):
    # Keep integral Fractions as plain ints so exact fast paths stay fast.
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class Matrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square")

    @property
    def dim(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, entries):
        entries = tuple(entries)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def is_exact(self):
        return all(isinstance(x, (int, Fraction)) for r in self.rows for x in r)

    def _require_same_dim(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_dim(other)
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_dim(other)
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._require_same_dim(other)
            cols = tuple(zip(*other.rows))
            return Matrix(
                tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
            )
        other = _normalize_scalar(other)
        return Matrix(tuple(tuple(a * other for a in r) for r in self.rows))

    def __rmul__(self, scalar):
        scalar = _normalize_scalar(scalar)
        return Matrix(tuple(tuple(scalar * a for a in r) for r in self.rows))

    def scaled(self, scalar):
        return self * scalar

    def transpose(self):
        return Matrix(tuple(zip(*self.rows)))

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.dim))

    def entry(self, i, j):
        return self.rows[i][j]

    def max_abs(self):
        return max((abs(float(_as_number(x))) for r in self.rows for x in r), default=0.0)

    def max_deviation(self, other):
        """Largest entrywise absolute difference, as a float."""
        self._require_same_dim(other)
        return max(
            (abs(float(_as_number(a)) - float(_as_number(b))) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)),
            default=0.0,
        )

    def equal(self, other, rel_tol=None):
        """Exact comparison when both operands are exact, tolerance otherwise."""
        self._require_same_dim(other)
        if self.is_exact() and other.is_exact():
            return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))
        scale = max(1.0, self.max_abs(), other.max_abs())
        tol_kwargs = {} if rel_tol is None else {"rel_tol": rel_tol}
        return all(
            approx_eq(float(_as_number(a)) / scale, float(_as_number(b)) / scale, **tol_kwargs)
            for r, s in zip(self.rows, other.rows)
            for a, b in zip(r, s)
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.equal(other)

    __hash__ = None


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a.equal(b)


def apply_to_columns(a: Matrix, cols):
    """Compute a @ cols for a rectangular column block.

    ``cols`` is a list of column vectors (each a list of entries of length
    a.dim).  Used to drive square operators through a tall inclusion matrix
    without forming non-square Matrix objects.
    """
    n = a.dim
    out = []
    for col in cols:
        if len(col) != n:
            raise DimensionMismatch(f"column length {len(col)} vs {n}")
        nz = [(i, v) for i, v in enumerate(col) if v != 0]
        out.append([sum(row[i] * v for i, v in nz) for row in a.rows])
    return out


def charpoly2(m: Matrix):
    """Coefficients (1, c1, c0) of the characteristic polynomial of a 2x2."""
    if m.dim != 2:
        raise DimensionMismatch("charpoly2 needs a 2x2 matrix")
    tr = m.rows[0][0] + m.rows[1][1]
    det = m.rows[0][0] * m.rows[1][1] - m.rows[0][1] * m.rows[1][0]
    return (1, -tr, det)


def matrix_to_json(m: Matrix):
    """Row-major JSON document: rationals as "p/q" strings, floats as doubles."""
    from .scalars import rational_to_str

    def enc(x):
        if isinstance(x, Approx):
            return x.value
        if isinstance(x, float):
            return x
        return rational_to_str(Fraction(x))

    return {"dim": m.dim, "rows": [[enc(x) for x in row] for row in m.rows]}


def matrix_from_json(doc) -> Matrix:
    from .scalars import rational_from_str

    def dec(x):
        return x if isinstance(x, float) else rational_from_str(x)

    return Matrix(tuple(tuple(dec(x) for x in row) for row in doc["rows"]))


def rank_exact(rows) -> int:
    """Rank of a rectangular matrix with int or Fraction entries.

    Fraction-free (Bareiss style) elimination over the integers; Fraction
    rows are cleared to integers first.  Exact for any input size; intended
    for the desk-scale matrices that appear here.
    """
    work = []
    for row in rows:
        row = list(row)
        denoms = [x.denominator for x in row if isinstance(x, Fraction)]
        if denoms:
            lcm = 1
            for d in denoms:
                lcm = lcm * d // math.gcd(lcm, d)
            row = [int(x * lcm) for x in row]
        else:
            row = [int(x) for x in row]
        work.append(row)
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    prev_pivot = 1
    row_idx = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row_idx, len(work)):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[row_idx], work[pivot_row] = work[pivot_row], work[row_idx]
        pivot = work[row_idx][col]
        row_p = work[row_idx]
        for r in range(row_idx + 1, len(work)):
            factor = work[r][col]
            row_r = work[r]
            # Bareiss update: every entry is a minor, so the division is exact.
            work[r] = [(pivot * row_r[c] - factor * row_p[c]) // prev_pivot for c in range(ncols)]
        prev_pivot = pivot
        row_idx += 1
        rank += 1
        if row_idx == len(work):
            break
    return rank
