"""Exact dense linear algebra over the rationals.

Everything is a dense Matrix of Fraction entries.  Row reduction uses the
fixed pivoting rule "first nonzero column, smallest row index", so every
derived object (echelon forms, kernel and image bases, particular solutions,
minimal polynomials) is deterministic: same input, same output, bit for bit.

Two conventions coexist and are both exposed on purpose.  rank_and_bases /
solve_linear speak the column language (vectors are columns, kernel columns
satisfy m @ x = 0).  The module-theoretic callers work with row vectors
acted on from the right, so row_space / left_kernel / solve_xa_b provide the
row-language counterparts.
"""
from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable-by-convention dense rational matrix."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data, nrows=None, ncols=None):
        if nrows is None:
            nrows = len(data)
            ncols = len(data[0]) if nrows else 0
        self.nrows = nrows
        self.ncols = ncols
        self.data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [[_frac(x) for x in r] for r in rows]
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        return cls(rows, len(rows), ncols)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[F0] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls([[F1 if i == j else F0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def row_vector(cls, entries):
        return cls.from_rows([list(entries)])

    @classmethod
    def column_vector(cls, entries):
        return cls.from_rows([[x] for x in entries])

    # -- basics ------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.nrows)]

    def entry(self, i, j):
        return self.data[i][j]

    def copy_rows(self):
        return [list(r) for r in self.data]

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)], self.ncols, self.nrows)

    def is_zero(self):
        return all(x == 0 for r in self.data for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return "Matrix(%d x %d)" % self.shape

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in add")
        return Matrix([[a + b for a, b in zip(r, s)]
                       for r, s in zip(self.data, other.data)],
                      self.nrows, self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in sub")
        return Matrix([[a - b for a, b in zip(r, s)]
                       for r, s in zip(self.data, other.data)],
                      self.nrows, self.ncols)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.data], self.nrows, self.ncols)

    def scale(self, c):
        c = _frac(c)
        return Matrix([[c * a for a in r] for r in self.data], self.nrows, self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matmul: %s @ %s"
                             % (self.shape, other.shape))
        ot = other.data
        out = []
        for r in self.data:
            row = [F0] * other.ncols
            for k, a in enumerate(r):
                if a:
                    ok = ot[k]
                    for j in range(other.ncols):
                        b = ok[j]
                        if b:
                            row[j] += a * b
            out.append(row)
        return Matrix(out, self.nrows, other.ncols)

    def power(self, k):
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return out


def hstack(mats):
    mats = [m for m in mats]
    if not mats:
        raise ValueError("hstack of nothing")
    n = mats[0].nrows
    for m in mats:
        if m.nrows != n:
            raise ValueError("hstack row mismatch")
    data = [sum((m.data[i] for m in mats), []) for i in range(n)]
    return Matrix(data, n, sum(m.ncols for m in mats))


def vstack(mats):
    mats = [m for m in mats]
    if not mats:
        raise ValueError("vstack of nothing")
    c = mats[0].ncols
    for m in mats:
        if m.ncols != c:
            raise ValueError("vstack column mismatch")
    data = [list(r) for m in mats for r in m.data]
    return Matrix(data, len(data), c)


def block_diag(mats):
    rows = sum(m.nrows for m in mats)
    cols = sum(m.ncols for m in mats)
    out = [[F0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.nrows):
            out[r0 + i][c0:c0 + m.ncols] = list(m.data[i])
        r0 += m.nrows
        c0 += m.ncols
    return Matrix(out, rows, cols)


# -- echelon machinery -----------------------------------------------------

def rref(mat):
    """Reduced row echelon form.

    Returns (R, pivot_cols).  Pivoting: scan columns left to right, take the
    first row (smallest index among the unused) with a nonzero entry.
    """
    rows = mat.copy_rows()
    nr, nc = mat.nrows, mat.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        sel = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = F1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
    return Matrix(rows, nr, nc), tuple(pivots)


def rank(mat):
    return len(rref(mat)[1])


def row_space(mat):
    """Basis of the row space: the nonzero rows of the RREF."""
    R, piv = rref(mat)
    return Matrix(R.data[:len(piv)], len(piv), mat.ncols)


def right_kernel(mat):
    """Columns x with mat @ x = 0, one per free column, reduced form."""
    R, piv = rref(mat)
    pivset = set(piv)
    free = [c for c in range(mat.ncols) if c not in pivset]
    cols = []
    for fc in free:
        v = [F0] * mat.ncols
        v[fc] = F1
        for r, pc in enumerate(piv):
            v[pc] = -R.data[r][fc]
        cols.append(v)
    if not cols:
        return Matrix.zeros(mat.ncols, 0)
    return Matrix([[cols[j][i] for j in range(len(cols))]
                   for i in range(mat.ncols)], mat.ncols, len(cols))


def left_kernel(mat):
    """Rows x with x @ mat = 0, stacked as a matrix."""
    return right_kernel(mat.transpose()).transpose()


def column_space(mat):
    """Columns spanning the column space, in reduced echelon form."""
    return row_space(mat.transpose()).transpose()


def rank_and_bases(mat):
    """(rank, kernel basis as columns, image basis as columns)."""
    R, piv = rref(mat)
    return len(piv), right_kernel(mat), column_space(mat)


def solve_linear(a, b):
    """Solve a @ X = b for X; None when the system is inconsistent.

    Free variables are set to zero, so the particular solution is
    deterministic.
    """
    if a.nrows != b.nrows:
        raise ValueError("solve_linear shape mismatch")
    aug = hstack([a, b])
    R, piv = rref(aug)
    for c in piv:
        if c >= a.ncols:
            return None
    sol = [[F0] * b.ncols for _ in range(a.ncols)]
    for r, pc in enumerate(piv):
        for j in range(b.ncols):
            sol[pc][j] = R.data[r][a.ncols + j]
    return Matrix(sol, a.ncols, b.ncols)


def solve_xa_b(a, b):
    """Solve X @ a = b for X (row convention); None when inconsistent."""
    sol = solve_linear(a.transpose(), b.transpose())
    return None if sol is None else sol.transpose()


def in_row_space(basis, vec_rows):
    """True iff every row of vec_rows lies in the row space of basis."""
    return solve_xa_b(basis, vec_rows) is not None


# -- minimal polynomial ----------------------------------------------------

def minimal_polynomial(mat):
    """Monic minimal polynomial, coefficients low degree first.

    The first linear dependence among I, M, M^2, ... is found by exact
    elimination, so the result is the true minimal polynomial.
    """
    n = mat.nrows
    if mat.ncols != n:
        raise ValueError("minimal polynomial of non-square matrix")
    if n == 0:
        return [F1]
    powers = [Matrix.identity(n)]
    flat = Matrix.from_rows([[x for r in powers[0].data for x in r]])
    while True:
        nxt = powers[-1] @ mat
        target = Matrix.from_rows([[x for r in nxt.data for x in r]])
        sol = solve_xa_b(flat, target)
        if sol is not None:
            coeffs = [-sol.data[0][i] for i in range(sol.ncols)]
            coeffs.append(F1)
            return coeffs
        powers.append(nxt)
        flat = vstack([flat, target])


def poly_eval_matrix(coeffs, mat):
    """Evaluate a polynomial (low degree first) at a square matrix."""
    n = mat.nrows
    out = Matrix.zeros(n, n)
    for c in reversed(coeffs):
        out = out @ mat
        if c:
            ident = Matrix.identity(n)
            out = out + ident.scale(c)
    return out
