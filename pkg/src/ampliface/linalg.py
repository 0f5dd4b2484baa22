"""Exact rational matrices: fraction-free determinants, Plucker vectors.

Everything here is over `fractions.Fraction`; no floating point.  Zero
tests are exact.  Determinants use fraction-free (Bareiss) elimination,
whose intermediate divisions are exact.
"""

from fractions import Fraction
from itertools import combinations

from .cyclic import mask_of
from .matroid import Matroid


class RationalMatrix:
    """An immutable matrix of exact rationals."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self):
        return RationalMatrix(list(zip(*self.rows)))

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols]
             for row in self.rows])

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def submatrix(self, row_idx, col_idx):
        return RationalMatrix(
            [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def scale_rows(self, factors):
        return RationalMatrix(
            [[f * x for x in row] for f, row in zip(factors, self.rows)])

    def scale_cols(self, factors):
        return RationalMatrix(
            [[f * x for f, x in zip(factors, row)] for row in self.rows])

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return det_bareiss([list(r) for r in self.rows])

    def rank(self):
        return len(self.rref()[1])

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        m = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = next((i for i in range(r, self.nrows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return m, pivots

    def nullspace(self):
        """Basis of the right kernel, one row vector per free column."""
        rref, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.ncols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -rref[r][fc]
            basis.append(tuple(v))
        return basis

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "\n".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix {self.nrows}x{self.ncols}\n{body}"


def det_bareiss(m):
    """Fraction-free Gaussian elimination; exact for int or Fraction."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    m = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for p in range(n - 1):
        if m[p][p] == 0:
            swap = next((i for i in range(p + 1, n) if m[i][p] != 0), None)
            if swap is None:
                return Fraction(0)
            m[p], m[swap] = m[swap], m[p]
            sign = -sign
        piv = m[p][p]
        for i in range(p + 1, n):
            row_i = m[i]
            row_p = m[p]
            f = row_i[p]
            for j in range(p + 1, n):
                row_i[j] = (row_i[j] * piv - f * row_p[j]) / prev
            row_i[p] = Fraction(0)
        prev = piv
    return sign * m[n - 1][n - 1]


def merge_sign(I, J):
    """Sign of the permutation sorting the concatenation of sorted I, J."""
    inversions = sum(1 for i in I for j in J if i > j)
    return -1 if inversions & 1 else 1


def signed_plucker(M, I, J):
    """Signed maximal row minor: 0 on overlap, else +-det of rows I u J.

    Rows are 1-based; |I| + |J| must equal the column count, and the
    union picks a square submatrix of M's rows.
    """
    I = tuple(sorted(I))
    J = tuple(sorted(J))
    if len(I) + len(J) != M.ncols:
        raise ValueError("|I| + |J| must equal the number of columns")
    if set(I) & set(J):
        return Fraction(0)
    rows = sorted(I + J)
    sub = M.submatrix([r - 1 for r in rows], range(M.ncols))
    return merge_sign(I, J) * sub.det()


def pluckers_cols(M):
    """All maximal column minors of a k x n matrix, keyed by column mask."""
    k, n = M.nrows, M.ncols
    out = {}
    for combo in combinations(range(n), k):
        out[mask_of(c + 1 for c in combo)] = det_bareiss(
            [[M.rows[i][j] for j in combo] for i in range(k)])
    return out


def pluckers_rows(M):
    """All maximal row minors of an n x w matrix, keyed by row mask."""
    n, w = M.nrows, M.ncols
    out = {}
    for combo in combinations(range(n), w):
        out[mask_of(r + 1 for r in combo)] = det_bareiss(
            [list(M.rows[i]) for i in combo])
    return out


def matroid_of_columns(M):
    """Column matroid of a k x n matrix (k-subsets with nonzero minor)."""
    bases = [mask for mask, v in pluckers_cols(M).items() if v != 0]
    if not bases:
        raise ValueError("matrix has rank below its row count")
    return Matroid(M.ncols, M.nrows, bases, _trusted=True)
