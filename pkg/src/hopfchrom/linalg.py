"""Exact dense linear algebra over a Field: RREF, nullspace, solve, Kronecker.

Matrices have dense semantics (every entry addressable, shapes fixed) but are
held sparsely as one ``{col: payload}`` dict per row; only nonzero payloads
are stored.  All algorithms are field-exact and deterministic: Gaussian
elimination pivots on the first nonzero entry of each column, and nullspace
bases are the canonical free-variable unit vectors with back-substituted
pivot coordinates, so results are reproducible byte for byte.
"""

from __future__ import annotations

from .fields import Field, FieldMismatchError

__all__ = [
    "Matrix",
    "LinAlgError",
    "ShapeError",
    "SingularMatrixError",
    "NoSolutionError",
    "kron",
    "permutation_matrix",
]


class LinAlgError(ValueError):
    pass


class ShapeError(LinAlgError):
    pass


class SingularMatrixError(LinAlgError):
    pass


class NoSolutionError(LinAlgError):
    """The linear system has no solution."""


class Matrix:
    """Immutable exact matrix; rows stored as ``{col: nonzero payload}``."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows=None):
        if nrows < 0 or ncols < 0:
            raise ShapeError(f"negative shape {nrows}x{ncols}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self._rows = rows if rows is not None else [dict() for _ in range(nrows)]

    # -- constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one = field.one
        return cls(field, n, n, [{i: one} for i in range(n)])

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        """Dense nested sequences; entries are ints or canonical payloads."""
        data = []
        ncols = None
        for row in rows:
            row = [field.coerce(v) for v in row]
            if ncols is None:
                ncols = len(row)
            elif len(row) != ncols:
                raise ShapeError("ragged rows")
            data.append({j: v for j, v in enumerate(row) if v != field.zero})
        return cls(field, len(data), ncols if ncols is not None else 0, data)

    @classmethod
    def from_entries(cls, field: Field, nrows: int, ncols: int, entries) -> "Matrix":
        """Sparse dict ``{(i, j): value}``; zeros are dropped."""
        rows = [dict() for _ in range(nrows)]
        zero = field.zero
        for (i, j), v in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ShapeError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            v = field.coerce(v)
            if v != zero:
                rows[i][j] = v
        return cls(field, nrows, ncols, rows)

    @classmethod
    def column(cls, field: Field, vector) -> "Matrix":
        vec = [field.coerce(v) for v in vector]
        rows = [({0: v} if v != field.zero else {}) for v in vec]
        return cls(field, len(vec), 1, rows)

    @classmethod
    def row_vector(cls, field: Field, vector) -> "Matrix":
        vec = [field.coerce(v) for v in vector]
        row = {j: v for j, v in enumerate(vec) if v != field.zero}
        return cls(field, 1, len(vec), [row])

    @classmethod
    def from_columns(cls, field: Field, columns) -> "Matrix":
        cols = [[field.coerce(v) for v in col] for col in columns]
        nrows = len(cols[0]) if cols else 0
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(cols):
            if len(col) != nrows:
                raise ShapeError("ragged columns")
            for i, v in enumerate(col):
                if v != field.zero:
                    rows[i][j] = v
        return cls(field, nrows, len(cols), rows)

    # -- accessors -----------------------------------------------------------
    def entry(self, i: int, j: int):
        return self._rows[i].get(j, self.field.zero)

    def row_list(self, i: int) -> list:
        zero = self.field.zero
        row = self._rows[i]
        return [row.get(j, zero) for j in range(self.ncols)]

    def col_list(self, j: int) -> list:
        zero = self.field.zero
        return [row.get(j, zero) for row in self._rows]

    def dense(self) -> list[list]:
        return [self.row_list(i) for i in range(self.nrows)]

    def nonzero_items(self):
        for i, row in enumerate(self._rows):
            for j, v in row.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return all(not r for r in self._rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    __hash__ = None  # mutable-style container: unhashable

    def __repr__(self) -> str:
        return f"Matrix({self.field.spec}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def first_difference(self, other: "Matrix"):
        """Coordinates and values of the first differing entry, or None."""
        self._check_peer(other)
        if self.shape != other.shape:
            raise ShapeError(f"shape {self.shape} vs {other.shape}")
        for i in range(self.nrows):
            a, b = self._rows[i], other._rows[i]
            if a == b:
                continue
            for j in sorted(set(a) | set(b)):
                if a.get(j, self.field.zero) != b.get(j, self.field.zero):
                    return i, j, self.entry(i, j), other.entry(i, j)
        return None

    # -- arithmetic ----------------------------------------------------------
    def _check_peer(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed fields {self.field.spec} and {other.field.spec}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_peer(other)
        if self.shape != other.shape:
            raise ShapeError(f"add {self.shape} vs {other.shape}")
        f = self.field
        add, zero = f.add, f.zero
        rows = []
        for a, b in zip(self._rows, other._rows):
            out = dict(a)
            for j, v in b.items():
                if j in out:
                    s = add(out[j], v)
                    if s == zero:
                        del out[j]
                    else:
                        out[j] = s
                else:
                    out[j] = v
            rows.append(out)
        return Matrix(f, self.nrows, self.ncols, rows)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        rows = [{j: neg(v) for j, v in row.items()} for row in self._rows]
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, s) -> "Matrix":
        f = self.field
        s = f.coerce(s)
        if s == f.zero:
            return Matrix.zeros(f, self.nrows, self.ncols)
        mul = f.mul
        rows = [{j: mul(s, v) for j, v in row.items()} for row in self._rows]
        return Matrix(f, self.nrows, self.ncols, rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_peer(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"matmul {self.shape} by {other.shape}")
        f = self.field
        mul, add, zero = f.mul, f.add, f.zero
        orows = other._rows
        rows = []
        for arow in self._rows:
            acc: dict = {}
            for k, a in arow.items():
                brow = orows[k]
                for j, b in brow.items():
                    v = mul(a, b)
                    if j in acc:
                        s = add(acc[j], v)
                        if s == zero:
                            del acc[j]
                        else:
                            acc[j] = s
                    elif v != zero:
                        acc[j] = v
            rows.append(acc)
        return Matrix(f, self.nrows, other.ncols, rows)

    def apply(self, vector: list) -> list:
        """Matrix-vector product on a dense payload list."""
        if len(vector) != self.ncols:
            raise ShapeError(f"apply {self.shape} to vector of length {len(vector)}")
        f = self.field
        out = []
        for row in self._rows:
            acc = f.zero
            for j, v in row.items():
                x = vector[j]
                if x != f.zero:
                    acc = f.add(acc, f.mul(v, x))
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        rows = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self._rows):
            for j, v in row.items():
                rows[j][i] = v
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product with row-major flat indexing.

        ``(A kron B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]``; associative up
        to the flat index identification.
        """
        self._check_peer(other)
        f = self.field
        mul = f.mul
        rb, cb = other.nrows, other.ncols
        rows = [dict() for _ in range(self.nrows * rb)]
        for i, arow in enumerate(self._rows):
            if not arow:
                continue
            base_i = i * rb
            for k, brow in enumerate(other._rows):
                if not brow:
                    continue
                out = rows[base_i + k]
                for j, a in arow.items():
                    base_j = j * cb
                    for l, b in brow.items():
                        out[base_j + l] = mul(a, b)
        return Matrix(f, self.nrows * rb, self.ncols * cb, rows)

    # -- elimination ---------------------------------------------------------
    def rref(self):
        """Reduced row echelon form: ``(R, rank, pivot_columns)``."""
        f = self.field
        zero, one = f.zero, f.one
        rows = [dict(r) for r in self._rows]
        pivots = []
        pr = 0  # next pivot row
        for col in range(self.ncols):
            # first row at or below pr with a nonzero entry in this column
            sel = None
            for i in range(pr, self.nrows):
                if rows[i].get(col, zero) != zero:
                    sel = i
                    break
            if sel is None:
                continue
            rows[pr], rows[sel] = rows[sel], rows[pr]
            prow = rows[pr]
            pv = prow[col]
            if pv != one:
                c = f.inv(pv)
                prow = {j: f.mul(c, v) for j, v in prow.items()}
                rows[pr] = prow
            for i in range(self.nrows):
                if i == pr:
                    continue
                r = rows[i]
                factor = r.get(col, zero)
                if factor == zero:
                    continue
                for j, v in prow.items():
                    t = f.sub(r.get(j, zero), f.mul(factor, v))
                    if t == zero:
                        r.pop(j, None)
                    else:
                        r[j] = t
            pivots.append(col)
            pr += 1
            if pr == self.nrows:
                break
        return Matrix(f, self.nrows, self.ncols, rows), pr, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self) -> "Matrix":
        """Columns form the canonical basis of ``{v : Av = 0}``."""
        f = self.field
        R, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        cols = []
        for j in free:
            v = [f.zero] * self.ncols
            v[j] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.entry(r, j))
            cols.append(v)
        if not cols:
            return Matrix.zeros(f, self.ncols, 0)
        return Matrix.from_columns(f, cols)

    def solve(self, b: list) -> list:
        """One exact solution of ``Ax = b`` with free variables set to zero."""
        if len(b) != self.nrows:
            raise ShapeError(f"solve {self.shape} against length {len(b)}")
        f = self.field
        aug_rows = [dict(r) for r in self._rows]
        for i, v in enumerate(b):
            v = f.coerce(v)
            if v != f.zero:
                aug_rows[i][self.ncols] = v
        aug = Matrix(f, self.nrows, self.ncols + 1, aug_rows)
        R, rank, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            raise NoSolutionError("no solution")
        x = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = R.entry(r, self.ncols)
        return x

    def solve_matrix(self, Bmat: "Matrix") -> "Matrix":
        """Exact X with ``A X = B`` (free variables zero, per column)."""
        self._check_peer(Bmat)
        if Bmat.nrows != self.nrows:
            raise ShapeError(f"solve {self.shape} against {Bmat.shape}")
        f = self.field
        aug_rows = [dict(r) for r in self._rows]
        for i, row in enumerate(Bmat._rows):
            for j, v in row.items():
                aug_rows[i][self.ncols + j] = v
        aug = Matrix(f, self.nrows, self.ncols + Bmat.ncols, aug_rows)
        R, rank, pivots = aug.rref()
        if any(pc >= self.ncols for pc in pivots):
            raise NoSolutionError("no solution")
        out = [dict() for _ in range(self.ncols)]
        for r, pc in enumerate(pivots):
            for j, v in R._rows[r].items():
                if j >= self.ncols:
                    out[pc][j - self.ncols] = v
        return Matrix(f, self.ncols, Bmat.ncols, out)

    def inverse(self) -> "Matrix":
        """Exact inverse; raises SingularMatrixError when rank deficient."""
        if self.nrows != self.ncols:
            raise ShapeError(f"inverse of non-square {self.shape}")
        n = self.nrows
        f = self.field
        aug_rows = [dict(r) for r in self._rows]
        for i in range(n):
            aug_rows[i][self.ncols + i] = f.one
        aug = Matrix(f, n, 2 * n, aug_rows)
        R, rank, pivots = aug.rref()
        if rank < n or any(pc >= n for pc in pivots):
            raise SingularMatrixError("singular matrix")
        rows = [
            {j - n: v for j, v in R._rows[i].items() if j >= n} for i in range(n)
        ]
        return Matrix(f, n, n, rows)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Function form of :meth:`Matrix.kron`."""
    return a.kron(b)


def permutation_matrix(field: Field, images: list[int]) -> Matrix:
    """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
    n = len(images)
    rows = [dict() for _ in range(n)]
    for j, i in enumerate(images):
        rows[i][j] = field.one
    return Matrix(field, n, n, rows)
