"""Dense exact matrices over a number field and hermitian forms.

Vectors are plain tuples of :class:`~chgkit.numfield.FieldElement`.
Matrices are immutable; determinants use fraction-free (Bareiss)
elimination and signatures use an LDL* reduction with symmetric pivoting,
so every verdict is exact.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .embedding import Sign, certified_sign
from .errors import (
    ChgkitError,
    DegenerateRestriction,
    DependentBasis,
    DimensionMismatch,
    FieldLacksSqrt2,
    NotHermitian,
    ParseError,
    Singular,
)
from .numfield import QQ, FieldElement, parse_element, sqrt

__all__ = [
    "Matrix",
    "HermitianForm",
    "vector",
    "h_form",
    "h0_form",
    "form_eval",
    "conj_transpose",
    "change_of_basis_h0_to_h",
    "restricted_signature",
    "rref",
    "rank",
]


def vector(field, entries):
    return tuple(field.element(x) for x in entries)


def vec_conj(v):
    return tuple(x.conj() for x in v)


class Matrix:
    """Immutable dense matrix over a :class:`~chgkit.numfield.NumberField`."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field, rows):
        rows = tuple(tuple(field.element(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must be nonempty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, field, rows):
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        m._hash = None
        return m

    # -- constructors -----------------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls._raw(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def diag(cls, field, entries):
        entries = [field.element(x) for x in entries]
        z = field.zero
        n = len(entries)
        return cls._raw(field, tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field, cols):
        cols = [vector(field, c) for c in cols]
        return cls(field, list(zip(*cols)))

    @classmethod
    def from_json(cls, field, data):
        """Build from an array-of-arrays of element strings (or JSON text)."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid matrix JSON: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ParseError("matrix must be a JSON array of arrays")
        return cls(field, [[_parse_entry(field, x) for x in row] for row in data])

    # -- access -----------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def to_json(self):
        return [[str(x) for x in row] for row in self.rows]

    def key(self):
        """Canonical serialization, used for exact deduplication."""
        return json.dumps(self.to_json(), separators=(",", ":"))

    # -- arithmetic ---------------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            return False
        if other.shape != self.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return True

    def __add__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return Matrix._raw(self.field, tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return Matrix._raw(self.field, tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c):
        c = self.field.element(c)
        return Matrix._raw(self.field, tuple(tuple(c * x for x in r) for r in self.rows))

    __rmul__ = scale

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            zero = self.field.zero
            return Matrix._raw(
                self.field,
                tuple(tuple(_dot(r, c, zero) for c in cols) for r in self.rows),
            )
        if isinstance(other, tuple):
            return self.apply(other)
        return NotImplemented

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        return tuple(_dot(r, v, zero) for r in self.rows)

    def transpose(self):
        return Matrix._raw(self.field, tuple(zip(*self.rows)))

    T = property(transpose)

    def conj_transpose(self):
        return Matrix._raw(self.field, tuple(tuple(x.conj() for x in col) for col in zip(*self.rows)))

    H = property(conj_transpose)

    def conj(self):
        return Matrix._raw(self.field, tuple(tuple(x.conj() for x in r) for r in self.rows))

    def trace(self):
        self._require_square()
        return sum((self.rows[i][i] for i in range(self.nrows)), self.field.zero)

    def _require_square(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch(f"square matrix required, got {self.shape}")

    def det(self):
        """Determinant by Bareiss fraction-free elimination."""
        self._require_square()
        n = self.nrows
        M = [list(r) for r in self.rows]
        sign = 1
        prev_inv = None
        for k in range(n - 1):
            if not M[k][k]:
                piv = next((i for i in range(k + 1, n) if M[i][k]), None)
                if piv is None:
                    return self.field.zero
                M[k], M[piv] = M[piv], M[k]
                sign = -sign
            pk = M[k][k]
            for i in range(k + 1, n):
                mik = M[i][k]
                row_i, row_k = M[i], M[k]
                for j in range(k + 1, n):
                    val = row_i[j] * pk - mik * row_k[j]
                    row_i[j] = val if prev_inv is None else val * prev_inv
            prev_inv = pk.inverse()
        d = M[n - 1][n - 1]
        return d if sign == 1 else -d

    def inverse(self):
        """Gauss-Jordan inverse; raises Singular."""
        self._require_square()
        n = self.nrows
        one, zero = self.field.one, self.field.zero
        A = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if A[r][col]), None)
            if piv is None:
                raise Singular("matrix is singular")
            A[col], A[piv] = A[piv], A[col]
            inv = A[col][col].inverse()
            A[col] = [x * inv for x in A[col]]
            for r in range(n):
                f = A[r][col]
                if r != col and f:
                    A[r] = [x - f * y for x, y in zip(A[r], A[col])]
        return Matrix._raw(self.field, tuple(tuple(row[n:]) for row in A))

    def rank(self):
        return len(rref(self.rows)[1])

    def block(self, rows, cols):
        return Matrix._raw(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def change_field(self, field):
        """Re-coerce rational entries into another field."""
        return Matrix(field, [[x.rational_value() for x in r] for r in self.rows])

    def is_integral(self):
        return all(x.has_integral_coords() for r in self.rows for x in r)

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"Matrix({self.to_json()})"


def _dot(r, c, zero):
    acc = zero
    for x, y in zip(r, c):
        if x and y:
            acc = acc + x * y
    return acc


def _parse_entry(field, x):
    if isinstance(x, bool):
        raise ParseError(f"invalid matrix entry {x!r}")
    if isinstance(x, int):
        return field.element(x)
    if isinstance(x, str):
        return parse_element(field, x)
    raise ParseError(f"invalid matrix entry {x!r}")


def rref(rows, field=None):
    """Reduced row echelon form over the field; returns (rows, pivot columns).

    Plain int/Fraction entries are coerced into ``field``, or into the field
    of the first FieldElement entry (Q if there is none).
    """
    M = [list(r) for r in rows]
    if not M:
        return (), ()
    if field is None:
        field = next((x.field for r in M for x in r if isinstance(x, FieldElement)), QQ)
    M = [[field.element(x) for x in r] for r in M]
    nr, nc = len(M), len(M[0])
    pivots = []
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nr) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][col].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(nr):
            f = M[i][col]
            if i != r and f:
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == nr:
            break
    return tuple(tuple(row) for row in M[:r]), tuple(pivots)


def rank(vectors, field=None):
    return len(rref(vectors, field)[1])


def conj_transpose(A):
    return A.conj_transpose()


# ---------------------------------------------------------------------------
# hermitian forms


class HermitianForm:
    """Nondegenerate hermitian form x, y -> y* H x."""

    __slots__ = ("matrix", "_inv")

    def __init__(self, matrix):
        if matrix.nrows != matrix.ncols:
            raise DimensionMismatch("form matrix must be square")
        if matrix.H != matrix:
            raise NotHermitian("form matrix is not equal to its conjugate transpose")
        if not matrix.det():
            raise Singular("form is degenerate")
        self.matrix = matrix
        self._inv = None

    @property
    def field(self):
        return self.matrix.field

    @property
    def dim(self):
        return self.matrix.nrows

    @property
    def n(self):
        return self.matrix.nrows - 1

    @property
    def inverse_matrix(self):
        if self._inv is None:
            self._inv = self.matrix.inverse()
        return self._inv

    def __call__(self, x, y=None):
        return form_eval(self, x, x if y is None else y)

    def gram(self, basis):
        return Matrix(self.field, [[form_eval(self, bk, bj) for bk in basis] for bj in basis])

    def __eq__(self, other):
        return isinstance(other, HermitianForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"HermitianForm({self.matrix.to_json()})"


def form_eval(F, x, y):
    """y* H x."""
    d = F.dim
    if len(x) != d or len(y) != d:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} for a form in dimension {d}")
    Hx = F.matrix.apply(tuple(x))
    acc = F.field.zero
    for yj, hj in zip(y, Hx):
        if yj and hj:
            acc = acc + yj.conj() * hj
    return acc


@lru_cache(maxsize=None)
def h_form(n, field):
    """The form y1*conj(y_{n+1}) + y_{n+1}*conj(y1) + sum_{2<=i<=n} |y_i|^2."""
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    rows[0][n] = rows[n][0] = 1
    for i in range(1, n):
        rows[i][i] = 1
    return HermitianForm(Matrix(field, rows))


@lru_cache(maxsize=None)
def h0_form(n, field):
    """The diagonal form |x1|^2 + ... + |x_n|^2 - |x_{n+1}|^2."""
    return HermitianForm(Matrix.diag(field, [1] * n + [-1]))


def change_of_basis_h0_to_h(n, field, sqrt2=None):
    """The matrix T with y = T x taking h0-coordinates to h-coordinates.

    Requires a square root of 2 in ``field``.  The identity T* H_h T = H_0
    is verified exactly before returning.
    """
    if sqrt2 is None:
        sqrt2 = sqrt(field.element(2))
        if sqrt2 is None:
            raise FieldLacksSqrt2(f"{field!r} has no square root of 2")
        try:
            if certified_sign(sqrt2) is Sign.NEGATIVE:
                sqrt2 = -sqrt2
        except ChgkitError:
            pass
    else:
        sqrt2 = field.element(sqrt2)
        if sqrt2 * sqrt2 != 2:
            raise FieldLacksSqrt2("supplied element does not square to 2")
    c = sqrt2 / 2
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    rows[0][0] = rows[0][n] = rows[n][0] = c
    rows[n][n] = -c
    for i in range(1, n):
        rows[i][i] = 1
    T = Matrix(field, rows)
    if T.H @ h_form(n, field).matrix @ T != h0_form(n, field).matrix:
        raise AssertionError("change of variables failed verification")
    return T


def restricted_signature(F, basis, emb=None):
    """Signature (p, q) of ``F`` restricted to span(basis).

    Exact LDL* reduction of the Gram matrix with symmetric pivoting: a nonzero
    diagonal pivot contributes its certified sign; when every remaining
    diagonal entry vanishes, a nonzero off-diagonal pair forms a hyperbolic
    2x2 block contributing (1, 1).
    """
    basis = [tuple(F.field.element(x) for x in v) for v in basis]
    if not basis:
        return (0, 0)
    if rank(basis) < len(basis):
        raise DependentBasis("basis vectors are linearly dependent")
    G = [list(r) for r in F.gram(basis).rows]
    p = q = 0
    idx = list(range(len(G)))
    while idx:
        piv = next((i for i in idx if G[i][i]), None)
        if piv is not None:
            s = certified_sign(G[piv][piv], emb)
            if s is Sign.POSITIVE:
                p += 1
            else:
                q += 1
            idx.remove(piv)
            inv = G[piv][piv].inverse()
            for i in idx:
                gi = G[i][piv]
                if gi:
                    f = gi * inv
                    for j in idx:
                        G[i][j] = G[i][j] - f * G[piv][j]
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and G[i][j]), None)
        if pair is None:
            raise DegenerateRestriction(f"form is degenerate on the span (nullity {len(idx)})")
        i0, j0 = pair
        p += 1
        q += 1
        idx.remove(i0)
        idx.remove(j0)
        # block B = [[0, g], [conj g, 0]], B^{-1} = [[0, 1/conj g], [1/g, 0]]
        g = G[i0][j0]
        gbar_inv, g_inv = G[j0][i0].inverse(), g.inverse()
        for i in idx:
            a, b = G[i][i0], G[i][j0]
            if not (a or b):
                continue
            # row i of C B^{-1}: (b / g, a / conj g)
            u, w = b * g_inv, a * gbar_inv
            for j in idx:
                G[i][j] = G[i][j] - u * G[i0][j] - w * G[j0][j]
    return (p, q)
