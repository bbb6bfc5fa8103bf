"""Exact linear algebra over the coefficient fields.

Elimination is fraction-free (Bareiss) over the rationals after clearing
row denominators; prime and cyclotomic fields use plain Gaussian
elimination.  The pivot rule everywhere is: scan columns left to right,
take the first row (top to bottom among unused rows) with a nonzero
entry.  All bases (kernels, subspaces) come out in reduced-echelon,
pivot-ordered form, so identical inputs give identical outputs.
"""

from ._rat import rat
from .fields import RationalField


class Matrix:
    """Dense rectangular matrix; rows of field scalars."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("empty matrix needs explicit ncols")
            ncols = len(self.rows[0])
        self.ncols = ncols
        assert all(len(r) == ncols for r in self.rows)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one
        for i in range(n):
            m.rows[i][i] = one
        return m

    @classmethod
    def from_columns(cls, field, columns, nrows):
        m = cls.zeros(field, nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                if v:
                    m.rows[i][j] = v
        return m

    def column(self, j):
        return [r[j] for r in self.rows]

    def copy(self):
        return Matrix(self.field, self.rows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))
        )

    def __add__(self, other):
        return Matrix(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other):
        return Matrix(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        return Matrix(self.field, [[c * a for a in r] for r in self.rows], self.ncols)

    def mul(self, other):
        assert self.ncols == other.nrows
        zero = self.field.zero
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(arow):
                if a:
                    for j, b in enumerate(brows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.field, out, other.ncols)

    def mulvec(self, vec):
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def __repr__(self):
        return "Matrix(%dx%d over %s)" % (self.nrows, self.ncols, self.field.describe())


def stack(matrices):
    """Vertical stack; all blocks must share the column count."""
    assert matrices
    ncols = matrices[0].ncols
    rows = []
    for m in matrices:
        assert m.ncols == ncols
        rows.extend(m.rows)
    return Matrix(matrices[0].field, rows, ncols)


def _clear_denominators(row):
    lcm = 1
    for x in row:
        d = x.denominator
        if d != 1:
            g = _gcd(lcm, d)
            lcm = lcm // g * d
    if lcm == 1:
        return [int(x.numerator) for x in row]
    return [int(x.numerator * (lcm // x.denominator)) for x in row]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _echelon_bareiss(int_rows, ncols):
    """Fraction-free forward elimination on integer rows; returns pivots."""
    nrows = len(int_rows)
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if int_rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            int_rows[r], int_rows[pr] = int_rows[pr], int_rows[r]
        piv = int_rows[r][c]
        for i in range(r + 1, nrows):
            row = int_rows[i]
            f = row[c]
            prow = int_rows[r]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
                row[c] = 0
            elif any(row[j] for j in range(c + 1, ncols)):
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _echelon_gauss(rows, ncols):
    """Forward elimination with field division; returns pivots."""
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                factor = f / piv
                row, prow = rows[i], rows[r]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = row[j] - factor * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(matrix):
    """Reduced row echelon form: (canonical pivot rows, pivot columns)."""
    field = matrix.field
    ncols = matrix.ncols
    if isinstance(field, RationalField):
        work = [_clear_denominators(row) for row in matrix.rows]
        pivots = _echelon_bareiss(work, ncols)
        rows = [[rat(x) for x in work[i]] for i in range(len(pivots))]
    else:
        rows = [list(r) for r in matrix.rows]
        pivots = _echelon_gauss(rows, ncols)
        rows = rows[: len(pivots)]
    # normalize pivots to one and eliminate upwards
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        piv = rows[i][c]
        if piv != field.one:
            rows[i] = [x / piv for x in rows[i]]
        for k in range(i):
            f = rows[k][c]
            if f:
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[i])]
    return rows, tuple(pivots)


def rank(matrix):
    """Row rank by exact elimination."""
    field = matrix.field
    if isinstance(field, RationalField):
        work = [_clear_denominators(row) for row in matrix.rows]
        return len(_echelon_bareiss(work, matrix.ncols))
    rows = [list(r) for r in matrix.rows]
    return len(_echelon_gauss(rows, matrix.ncols))


def kernel_basis(matrix):
    """Null-space basis, reduced-echelon and ordered by free column."""
    field = matrix.field
    rows, pivots = rref(matrix)
    zero, one = field.zero, field.one
    pivset = set(pivots)
    basis = []
    for f in range(matrix.ncols):
        if f in pivset:
            continue
        vec = [zero] * matrix.ncols
        vec[f] = one
        for i, p in enumerate(pivots):
            if rows[i][f]:
                vec[p] = -rows[i][f]
        basis.append(vec)
    return basis


def solve_affine(matrix, rhs):
    """One exact solution of A x = b plus the kernel basis, or None.

    The particular solution sets every free variable to zero under the
    fixed pivot order.
    """
    assert matrix.nrows == len(rhs)
    aug = Matrix(
        matrix.field,
        [row + [b] for row, b in zip(matrix.rows, rhs)],
        matrix.ncols + 1,
    )
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == matrix.ncols:
        return None
    zero = matrix.field.zero
    particular = [zero] * matrix.ncols
    for i, p in enumerate(pivots):
        particular[p] = rows[i][matrix.ncols]
    return particular, kernel_basis(matrix)


class Subspace:
    """Subspace of field^n held by its canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, vectors):
        self.field = field
        self.ambient = ambient
        if vectors:
            rows, pivots = rref(Matrix(field, vectors, ambient))
        else:
            rows, pivots = [], ()
        self.basis = rows
        self.pivots = pivots

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, Matrix.identity(field, ambient).rows)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, [])

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Residual of vec modulo this subspace."""
        out = list(vec)
        for row, p in zip(self.basis, self.pivots):
            f = out[p]
            if f:
                for j, b in enumerate(row):
                    if b:
                        out[j] = out[j] - f * b
        return out

    def contains(self, vec):
        return not any(self.reduce(vec))

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vec):
        """Coordinates of vec in the canonical basis; vec must lie inside."""
        coords = [vec[p] for p in self.pivots]
        res = list(vec)
        for c, row in zip(coords, self.basis):
            if c:
                res = [a - c * b for a, b in zip(res, row)]
        if any(res):
            raise ValueError("vector not in subspace")
        return coords

    def sum(self, other):
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other):
        """Intersection via the kernel of [B1 | -B2] on stacked coordinates."""
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        cols = [list(b) for b in self.basis] + [[-x for x in b] for b in other.basis]
        m = Matrix(self.field, list(map(list, zip(*cols))), len(cols))
        vecs = []
        for k in kernel_basis(m):
            combo = [self.field.zero] * self.ambient
            for c, b in zip(k[: self.dim], self.basis):
                if c:
                    combo = [a + c * x for a, x in zip(combo, b)]
            vecs.append(combo)
        return Subspace(self.field, self.ambient, vecs)

    def complement_in(self, bigger):
        """Deterministic complement of self inside bigger (pivot-column rule)."""
        mine = set(self.pivots)
        return [row for row, p in zip(bigger.basis, bigger.pivots) if p not in mine]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.basis == other.basis
        )

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)


def preimage_basis(maps_and_targets, ambient, field):
    """Subspace {v : M v in T for every (M, T) pair}.

    Each pair is (Matrix, Subspace of the codomain); T=None means {0}.
    """
    residual_rows = []
    for m, target in maps_and_targets:
        if target is None:
            residual_rows.extend(m.rows)
        else:
            cols = [target.reduce(m.column(j)) for j in range(m.ncols)]
            residual_rows.extend(map(list, zip(*cols)))
    if not residual_rows:
        return Subspace.full(field, ambient)
    mat = Matrix(field, residual_rows, ambient)
    return Subspace(field, ambient, kernel_basis(mat))


def image_space(matrix):
    """Column span of a matrix as a canonical Subspace."""
    cols = [matrix.column(j) for j in range(matrix.ncols)]
    return Subspace(matrix.field, matrix.nrows, cols)
