"""Finite-dimensional Hopf algebras as structure-constant data.

``hopf_make`` runs the full bialgebra/antipode axiom suite and fails
atomically, naming the violated axiom and the basis indices of the first
offending coefficient.  Everything downstream may therefore assume a genuine
Hopf algebra.

Conventions (basis ``e_0 .. e_{n-1}``):

  * ``mult[i][j]``  is the sparse row ``{k: m_ijk}`` of ``e_i e_j``,
  * ``comult[k]``   is ``{(i, j): c_kij}`` with ``Delta(e_k) = sum c e_i ox e_j``,
  * ``antipode``    is the matrix with ``S(e_j) = sum_i S[i][j] e_i``,
  * elements of H (and of H*, in the dual basis) are dense payload lists.

Tensor legs are flattened row-major and left-nested: ``(i, j) -> i*n + j``.
"""

from __future__ import annotations

from .fields import Field
from .linalg import Matrix, SingularMatrixError, permutation_matrix

__all__ = [
    "HopfAlgebra",
    "HopfAxiomError",
    "HopfDataError",
    "hopf_make",
    "vec_eq",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "pairing",
]


class HopfDataError(ValueError):
    """Structurally inconsistent input tensors (shape or entry errors)."""


class HopfAxiomError(ValueError):
    """A named Hopf-algebra axiom fails at specific basis indices."""

    def __init__(self, axiom: str, indices: tuple, detail: str = ""):
        self.axiom = axiom
        self.indices = indices
        msg = f"axiom violated: {axiom} at indices {indices}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


# -- small dense-vector helpers ----------------------------------------------

def vec_eq(a: list, b: list) -> bool:
    return a == b


def vec_add(field: Field, a: list, b: list) -> list:
    return [field.add(x, y) for x, y in zip(a, b)]


def vec_sub(field: Field, a: list, b: list) -> list:
    return [field.sub(x, y) for x, y in zip(a, b)]


def vec_scale(field: Field, s, a: list) -> list:
    return [field.mul(s, x) for x in a]


def vec_is_zero(field: Field, a: list) -> bool:
    return all(x == field.zero for x in a)


def pairing(field: Field, phi: list, v: list):
    """Dual pairing ``phi(v)`` of an H* element against an H element."""
    acc = field.zero
    for x, y in zip(phi, v):
        if x != field.zero and y != field.zero:
            acc = field.add(acc, field.mul(x, y))
    return acc


class HopfAlgebra:
    """Verified structure-constant Hopf algebra.  Build via :func:`hopf_make`."""

    def __init__(self, field, dim, basis_names, mult, unit, comult, counit,
                 antipode, name, _verified):
        if not _verified:
            raise HopfDataError("use hopf_make()")
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names)
        self.mult = mult          # tuple[tuple[dict[int, payload]]]
        self.unit = tuple(unit)   # coefficients of 1_H
        self.comult = comult      # tuple[dict[(int, int), payload]]
        self.counit = tuple(counit)
        self.antipode = antipode  # Matrix
        self.name = name
        self._antipode_inv = None
        self._left_mult = [None] * dim
        self._right_mult = [None] * dim

    # -- basic elements ------------------------------------------------------
    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def zero_vector(self) -> list:
        return [self.field.zero] * self.dim

    def unit_vector(self) -> list:
        return list(self.unit)

    def element(self, coeffs: dict[int, object] | list) -> list:
        """Dense element from a sparse ``{index: value}`` dict or a list."""
        if isinstance(coeffs, dict):
            v = self.zero_vector()
            for i, c in coeffs.items():
                v[i] = self.field.coerce(c)
            return v
        return [self.field.coerce(c) for c in coeffs]

    def format_vector(self, v: list) -> list[str]:
        return [self.field.format(x) for x in v]

    # -- algebra operations ----------------------------------------------------
    def multiply(self, a: list, b: list) -> list:
        """Bilinear extension of the multiplication tensor."""
        f = self.field
        zero = f.zero
        out = [zero] * self.dim
        for i, x in enumerate(a):
            if x == zero:
                continue
            row = self.mult[i]
            for j, y in enumerate(b):
                if y == zero:
                    continue
                xy = f.mul(x, y)
                for k, c in row[j].items():
                    out[k] = f.add(out[k], f.mul(xy, c))
        return out

    def counit_apply(self, a: list):
        return pairing(self.field, list(self.counit), a)

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of ``v -> e_i v``."""
        if self._left_mult[i] is None:
            entries = {}
            for j in range(self.dim):
                for k, c in self.mult[i][j].items():
                    entries[(k, j)] = c
            self._left_mult[i] = Matrix.from_entries(self.field, self.dim, self.dim, entries)
        return self._left_mult[i]

    def right_mult_matrix(self, j: int) -> Matrix:
        """Matrix of ``v -> v e_j``."""
        if self._right_mult[j] is None:
            entries = {}
            for i in range(self.dim):
                for k, c in self.mult[i][j].items():
                    entries[(k, i)] = c
            self._right_mult[j] = Matrix.from_entries(self.field, self.dim, self.dim, entries)
        return self._right_mult[j]

    def element_left_mult(self, a: list) -> Matrix:
        """Matrix of ``v -> a v``."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for i, x in enumerate(a):
            if x != self.field.zero:
                out = out + self.left_mult_matrix(i).scale(x)
        return out

    def element_right_mult(self, a: list) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for j, x in enumerate(a):
            if x != self.field.zero:
                out = out + self.right_mult_matrix(j).scale(x)
        return out

    # -- coalgebra operations ---------------------------------------------------
    def coproduct(self, a: list) -> dict:
        """Sparse ``{(i, j): coeff}`` of ``Delta(a)``."""
        return self.coproduct_iter(1, a)

    def coproduct_iter(self, k: int, a: list) -> dict:
        """Sparse ``Delta^(k)(a)`` over basis (k+1)-tuples; ``Delta^(0) = id``.

        Uses the recursion ``Delta^(k) = (Delta ox id^{ox k-1}) Delta^(k-1)``;
        coassociativity (part of the verified axioms) makes every other
        parenthesization agree.
        """
        if k < 0:
            raise HopfDataError("coproduct_iter needs k >= 0")
        f = self.field
        zero = f.zero
        cur = {(i,): x for i, x in enumerate(a) if x != zero}
        for _ in range(k):
            nxt: dict = {}
            for key, v in cur.items():
                rest = key[1:]
                for (p, q), c in self.comult[key[0]].items():
                    nk = (p, q) + rest
                    t = f.add(nxt.get(nk, zero), f.mul(v, c))
                    if t == zero:
                        nxt.pop(nk, None)
                    else:
                        nxt[nk] = t
            cur = nxt
        return cur

    def coproduct_iter_last(self, k: int, a: list) -> dict:
        """Same tensor computed by expanding the last leg; for cross-checks."""
        f = self.field
        zero = f.zero
        cur = {(i,): x for i, x in enumerate(a) if x != zero}
        for _ in range(k):
            nxt: dict = {}
            for key, v in cur.items():
                head = key[:-1]
                for (p, q), c in self.comult[key[-1]].items():
                    nk = head + (p, q)
                    t = f.add(nxt.get(nk, zero), f.mul(v, c))
                    if t == zero:
                        nxt.pop(nk, None)
                    else:
                        nxt[nk] = t
            cur = nxt
        return cur

    # -- antipode ------------------------------------------------------------
    def antipode_apply(self, a: list) -> list:
        return self.antipode.apply(a)

    def antipode_inverse(self) -> Matrix:
        """``S^{-1}`` as a matrix; exact, cached."""
        if self._antipode_inv is None:
            self._antipode_inv = self.antipode.inverse()
        return self._antipode_inv

    def antipode_inverse_apply(self, a: list) -> list:
        return self.antipode_inverse().apply(a)

    def antipode_vector(self, i: int) -> list:
        return self.antipode.col_list(i)

    # -- derived Hopf algebras -------------------------------------------------
    def dual_hopf(self, name: str | None = None) -> "HopfAlgebra":
        """H* with convolution product; re-verified by the axiom suite."""
        n = self.dim
        f = self.field
        zero = f.zero
        mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for (i, j), c in self.comult[k].items():
                mult[i][j][k] = c
        comult = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    comult[k][i][j] = c
        names = tuple(nm + "^*" for nm in self.basis_names)
        return hopf_make(
            f,
            names,
            mult,
            list(self.counit),
            comult,
            list(self.unit),
            self.antipode.transpose().dense(),
            name=name or f"dual({self.name})",
        )

    def cop(self, name: str | None = None) -> "HopfAlgebra":
        """H with opposite coproduct and antipode ``S^{-1}``."""
        n = self.dim
        zero = self.field.zero
        comult = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for (i, j), c in self.comult[k].items():
                comult[k][j][i] = c
        mult = self._dense_mult()
        return hopf_make(
            self.field,
            self.basis_names,
            mult,
            list(self.unit),
            comult,
            list(self.counit),
            self.antipode_inverse().dense(),
            name=name or f"cop({self.name})",
        )

    def op(self, name: str | None = None) -> "HopfAlgebra":
        """H with opposite product and antipode ``S^{-1}``."""
        n = self.dim
        zero = self.field.zero
        mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    mult[j][i][k] = c
        comult = self._dense_comult()
        return hopf_make(
            self.field,
            self.basis_names,
            mult,
            list(self.unit),
            comult,
            list(self.counit),
            self.antipode_inverse().dense(),
            name=name or f"op({self.name})",
        )

    def _dense_mult(self):
        n = self.dim
        zero = self.field.zero
        out = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    out[i][j][k] = c
        return out

    def _dense_comult(self):
        n = self.dim
        zero = self.field.zero
        out = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for (i, j), c in self.comult[k].items():
                out[k][i][j] = c
        return out

    # -- predicates ------------------------------------------------------------
    def is_grouplike(self, a: list) -> bool:
        """Exactly ``Delta(a) = a ox a`` and ``eps(a) = 1``."""
        f = self.field
        if self.counit_apply(a) != f.one:
            return False
        expect = {}
        for i, x in enumerate(a):
            if x == f.zero:
                continue
            for j, y in enumerate(a):
                if y != f.zero:
                    expect[(i, j)] = f.mul(x, y)
        return self.coproduct(a) == expect

    # -- structure matrices (tensor legs flattened row-major) -------------------
    def mult_matrix(self) -> Matrix:
        """``n x n^2`` matrix of the multiplication, column ``(i, j)``."""
        n = self.dim
        entries = {}
        for i in range(n):
            for j in range(n):
                for k, c in self.mult[i][j].items():
                    entries[(k, i * n + j)] = c
        return Matrix.from_entries(self.field, n, n * n, entries)

    def comult_matrix(self) -> Matrix:
        """``n^2 x n`` matrix of the comultiplication, row ``(i, j)``."""
        n = self.dim
        entries = {}
        for k in range(n):
            for (i, j), c in self.comult[k].items():
                entries[(i * n + j, k)] = c
        return Matrix.from_entries(self.field, n * n, n, entries)

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name!r}, dim={self.dim}, field={self.field.spec})"


def _normalize_tensors(field, dim, mult, unit, comult, counit, antipode):
    zero = field.zero
    if len(mult) != dim or any(len(r) != dim for r in mult):
        raise HopfDataError("mult tensor must be dim x dim x dim")
    if len(comult) != dim:
        raise HopfDataError("comult tensor must be dim x dim x dim")
    if len(unit) != dim or len(counit) != dim:
        raise HopfDataError("unit/counit must have length dim")
    sm = []
    for i in range(dim):
        row = []
        for j in range(dim):
            col = mult[i][j]
            if len(col) != dim:
                raise HopfDataError(f"mult[{i}][{j}] has length {len(col)}")
            vals = {k: field.coerce(v) for k, v in enumerate(col)}
            row.append({k: v for k, v in vals.items() if v != zero})
        sm.append(tuple(row))
    sc = []
    for k in range(dim):
        plane = comult[k]
        if len(plane) != dim or any(len(r) != dim for r in plane):
            raise HopfDataError(f"comult[{k}] must be dim x dim")
        d = {}
        for i in range(dim):
            for j in range(dim):
                v = field.coerce(plane[i][j])
                if v != zero:
                    d[(i, j)] = v
        sc.append(d)
    u = [field.coerce(v) for v in unit]
    eps = [field.coerce(v) for v in counit]
    S = Matrix.from_rows(field, antipode)
    if S.shape != (dim, dim):
        raise HopfDataError(f"antipode must be {dim}x{dim}, got {S.shape}")
    return tuple(sm), u, tuple(sc), eps, S


def _decode(flat: int, n: int, legs: int) -> tuple:
    out = []
    for _ in range(legs):
        flat, r = divmod(flat, n)
        out.append(r)
    return tuple(reversed(out))


def _expect_equal(lhs: Matrix, rhs: Matrix, axiom: str, decoder):
    diff = lhs.first_difference(rhs)
    if diff is not None:
        i, j, a, b = diff
        raise HopfAxiomError(axiom, decoder(i, j),
                             f"{lhs.field.format(a)} != {lhs.field.format(b)}")


def _verify_axioms(field, dim, mult, unit, comult, counit, S):
    """Raise HopfAxiomError at the first violated axiom, in a fixed order."""
    n = dim
    ident = Matrix.identity(field, n)
    entries = {}
    for i in range(n):
        for j in range(n):
            for k, c in mult[i][j].items():
                entries[(k, i * n + j)] = c
    M = Matrix.from_entries(field, n, n * n, entries)
    entries = {}
    for k in range(n):
        for (i, j), c in comult[k].items():
            entries[(i * n + j, k)] = c
    D = Matrix.from_entries(field, n * n, n, entries)
    u_col = Matrix.column(field, unit)
    eps_row = Matrix.row_vector(field, counit)

    # associativity: m(m ox id) = m(id ox m)
    _expect_equal(
        M @ M.kron(ident),
        M @ ident.kron(M),
        "associativity",
        lambda r, c: _decode(c, n, 3) + (r,),
    )
    # unitality: 1 e_j = e_j = e_j 1
    _expect_equal(M @ u_col.kron(ident), ident, "unitality",
                  lambda r, c: (c, r))
    _expect_equal(M @ ident.kron(u_col), ident, "unitality",
                  lambda r, c: (c, r))
    # coassociativity
    _expect_equal(
        D.kron(ident) @ D,
        ident.kron(D) @ D,
        "coassociativity",
        lambda r, c: (c,) + _decode(r, n, 3),
    )
    # counitality
    _expect_equal(eps_row.kron(ident) @ D, ident, "counitality",
                  lambda r, c: (c, r))
    _expect_equal(ident.kron(eps_row) @ D, ident, "counitality",
                  lambda r, c: (c, r))
    # comultiplication is an algebra map (incl. Delta(1) = 1 ox 1)
    swap23 = permutation_matrix(
        field,
        [
            ((a * n + c) * n + b) * n + d
            for a in range(n)
            for b in range(n)
            for c in range(n)
            for d in range(n)
        ],
    )
    m2 = M.kron(M) @ swap23  # multiplication of H ox H on 4-leg words
    _expect_equal(
        D @ M,
        m2 @ D.kron(D),
        "comultiplication-algebra-map",
        lambda r, c: _decode(c, n, 2) + _decode(r, n, 2),
    )
    _expect_equal(D @ u_col, u_col.kron(u_col), "comultiplication-algebra-map",
                  lambda r, c: _decode(r, n, 2))
    # counit is an algebra map
    _expect_equal(eps_row @ M, eps_row.kron(eps_row), "counit-algebra-map",
                  lambda r, c: _decode(c, n, 2))
    _expect_equal(
        eps_row @ u_col,
        Matrix.from_rows(field, [[field.one]]),
        "counit-algebra-map",
        lambda r, c: (),
    )
    # antipode axiom: m(S ox id)Delta = u eps = m(id ox S)Delta
    ue = u_col @ eps_row
    _expect_equal(M @ S.kron(ident) @ D, ue, "antipode-axiom",
                  lambda r, c: (c, r))
    _expect_equal(M @ ident.kron(S) @ D, ue, "antipode-axiom",
                  lambda r, c: (c, r))
    # bijectivity of S (automatic for genuine finite-dimensional Hopf data)
    try:
        S.inverse()
    except SingularMatrixError:
        raise HopfAxiomError("antipode-invertibility", (), "S is singular")


def hopf_make(field: Field, basis_names, mult, unit, comult, counit, antipode,
              name: str = "H") -> HopfAlgebra:
    """Build and fully verify a Hopf algebra from dense structure constants.

    ``mult[i][j][k]``, ``comult[k][i][j]``, ``antipode[i][j]`` with
    ``S(e_j) = sum_i antipode[i][j] e_i``.  Construction fails atomically on
    the first violated axiom.
    """
    basis_names = tuple(str(b) for b in basis_names)
    dim = len(basis_names)
    if dim == 0:
        raise HopfDataError("dimension must be positive")
    sm, u, sc, eps, S = _normalize_tensors(field, dim, mult, unit, comult,
                                           counit, antipode)
    _verify_axioms(field, dim, sm, u, sc, eps, S)
    return HopfAlgebra(field, dim, basis_names, sm, u, sc, eps, S, name, True)
