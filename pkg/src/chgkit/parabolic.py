"""The stabilizer P of the isotropic line through e_1, and P = MAU.

Coordinates ``(lam, theta, T, v, b)`` stand for the product M(theta, T) A(lam)
U(v, b) of the block matrices

    A(lam)      = diag(lam, I, 1/lam)                       lam real, nonzero
    M(theta, T) = diag(theta, T, theta)                     |theta| = 1, T unitary,
                                                            theta^2 = det(T)^{-1}
    U(v, b)     = [[1, -v*, i b - |v|^2/2], [0, I, v], [0, 0, 1]]    b real

in SU(n,1) for the standard form.  The coordinates are unique up to
(lam, theta) -> (-lam, -theta); the canonical representative has lam > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from .chgeom import GroupElement, su_membership
from .embedding import Sign, certified_sign
from .errors import ChgkitError, ConstraintViolated, DimensionMismatch, NotDecomposable, NotInP
from .linalg import Matrix, h_form
from .numfield import imaginary_unit, sqrt

__all__ = [
    "ParabolicCoords",
    "HeisenbergElement",
    "make_A",
    "make_M",
    "make_U",
    "make_Z",
    "make_D",
    "u_compose",
    "u_inverse",
    "decompose_P",
    "conj_on_Z",
    "conj_on_UmodZ",
    "in_P",
    "stabilizes_plane",
    "in_MAZ",
]


def _i(field):
    i = imaginary_unit(field)
    if i is None:
        raise ConstraintViolated(f"{field!r} has no square root of -1")
    return i


def _hnorm2(v, zero):
    return sum((x.conj() * x for x in v), zero)


def _hdot(v, w, zero):
    """v* w."""
    return sum((x.conj() * y for x, y in zip(v, w)), zero)


def _group(rows, field, n):
    return GroupElement(Matrix(field, rows), h_form(n, field), _verified=True)


@dataclass(frozen=True)
class HeisenbergElement:
    v: tuple
    b: object

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.v))
        if not self.b.is_real():
            raise ConstraintViolated("Heisenberg coordinate b must be real")


@dataclass(frozen=True)
class ParabolicCoords:
    lam: object
    theta: object
    T: Matrix
    v: tuple
    b: object

    @property
    def n(self):
        return self.T.nrows + 1

    @property
    def field(self):
        return self.lam.field

    def group(self):
        return make_M(self.theta, self.T) @ make_A(self.lam, self.n) @ make_U(self.v, self.b)

    def matrix(self):
        return self.group().matrix


def make_A(lam, n, field=None):
    """diag(lam, I_{n-1}, 1/lam) for real nonzero lam."""
    if field is not None:
        lam = field.element(lam)
    K = lam.field
    if not lam:
        raise ConstraintViolated("lam must be nonzero")
    if not lam.is_real():
        raise ConstraintViolated("lam must be real")
    return _group(Matrix.diag(K, [lam] + [1] * (n - 1) + [lam.inverse()]).rows, K, n)


def make_M(theta, T):
    """diag(theta, T, theta); checks that both blocks are unitary with theta^2 det T = 1."""
    K = T.field
    theta = K.element(theta)
    k = T.nrows
    if T.shape != (k, k):
        raise DimensionMismatch("T must be square")
    if theta.conj() * theta != 1:
        raise ConstraintViolated("theta must have modulus one")
    if T.H @ T != Matrix.identity(K, k):
        raise ConstraintViolated("T must be unitary")
    if theta * theta * T.det() != 1:
        raise ConstraintViolated("theta^2 must equal det(T)^{-1}")
    n = k + 1
    rows = [[K.zero] * (n + 1) for _ in range(n + 1)]
    rows[0][0] = rows[n][n] = theta
    for a in range(k):
        for c in range(k):
            rows[a + 1][c + 1] = T[a, c]
    return _group(rows, K, n)


def make_U(v, b, field=None):
    """The unipotent element with Heisenberg coordinates (v, b)."""
    if field is None:
        field = v[0].field
    K = field
    v = tuple(K.element(x) for x in v)
    b = K.element(b)
    if not b.is_real():
        raise ConstraintViolated("b must be real")
    n = len(v) + 1
    i = _i(K)
    rows = [[K.one if r == c else K.zero for c in range(n + 1)] for r in range(n + 1)]
    for a, x in enumerate(v):
        rows[0][a + 1] = -x.conj()
        rows[a + 1][n] = x
    rows[0][n] = i * b - _hnorm2(v, K.zero) / 2
    return _group(rows, K, n)


def make_Z(b, n, field):
    """Central element make_U(0, b)."""
    return make_U((field.zero,) * (n - 1), b, field)


def make_D(a, b, c, d, theta, T):
    """Element of the stabilizer of span(e_1, e_{n+1}).

    Outer block [[theta a, i theta b], [-i theta c, theta d]] with a, b, c, d
    real and ad - bc = 1; middle block T unitary; theta^2 det T = 1.
    """
    K = T.field
    a, b, c, d, theta = (K.element(x) for x in (a, b, c, d, theta))
    if not all(x.is_real() for x in (a, b, c, d)):
        raise ConstraintViolated("a, b, c, d must be real")
    if a * d - b * c != 1:
        raise ConstraintViolated("ad - bc must be 1")
    i = _i(K)
    g = make_M(theta, T).matrix
    rows = [list(r) for r in g.rows]
    n = T.nrows + 1
    rows[0][0], rows[0][n] = theta * a, i * theta * b
    rows[n][0], rows[n][n] = -i * theta * c, theta * d
    return su_membership(Matrix(K, rows), h_form(n, K))


def u_compose(x, y):
    """Group law of U in (v, b) coordinates.

    U(v1, b1) U(v2, b2) = U(v1 + v2, b1 + b2 - Im(v1* v2)).
    """
    K = x.b.field
    w = _hdot(x.v, y.v, K.zero)
    i = _i(K)
    im = (w - w.conj()) / (2 * i)
    return HeisenbergElement(tuple(p + q for p, q in zip(x.v, y.v)), x.b + y.b - im)


def u_inverse(x):
    return HeisenbergElement(tuple(-p for p in x.v), -x.b)


def in_P(g):
    """Whether g stabilizes the line through e_1 (first column is a multiple of e_1)."""
    M = g.matrix if isinstance(g, GroupElement) else g
    return all(not M[r, 0] for r in range(1, M.nrows))


def stabilizes_plane(g):
    """Whether g stabilizes span(e_1, e_{n+1})."""
    M = g.matrix if isinstance(g, GroupElement) else g
    n = M.nrows - 1
    return all(not M[r, c] for r in range(1, n) for c in (0, n))


def _canonical_sign(lam):
    try:
        return certified_sign(lam) is Sign.NEGATIVE
    except ChgkitError:
        c = lam.coeffs
        k = next(j for j, x in enumerate(c) if x)
        return c[k] < 0


def decompose_P(g):
    """Coordinates (lam, theta, T, v, b) with M(theta,T) A(lam) U(v,b) = g exactly."""
    M = g.matrix if isinstance(g, GroupElement) else g
    K = M.field
    n = M.nrows - 1
    if n < 2:
        raise DimensionMismatch("need n >= 2")
    if not in_P(M):
        raise NotInP("g does not stabilize the line through e_1")
    if any(M[n, c] for c in range(n)):
        raise NotDecomposable("last row is not a multiple of e_{n+1}^T")
    T = M.block(range(1, n), range(1, n))
    detT = T.det()
    if not detT:
        raise NotDecomposable("middle block is singular")
    theta = sqrt(detT.inverse())
    if theta is None:
        raise NotDecomposable("det(T)^{-1} has no square root in the field")
    lam = M[0, 0] / theta
    if not lam.is_real():
        raise NotDecomposable("lam is not real")
    if _canonical_sign(lam):
        lam, theta = -lam, -theta
    try:
        Tinv = T.inverse()
    except ChgkitError as exc:
        raise NotDecomposable(str(exc)) from exc
    v = Tinv.apply(M.column(n)[1:n])
    # top-right entry of M A U is theta lam (i b - |v|^2/2)
    corner = M[0, n] / (theta * lam) + _hnorm2(v, K.zero) / 2
    i = _i(K)
    b = corner / i
    if not b.is_real():
        raise NotDecomposable("central coordinate b is not real")
    try:
        coords = ParabolicCoords(lam, theta, T, v, b)
        ok = coords.matrix() == M
    except ConstraintViolated as exc:
        raise NotDecomposable(str(exc)) from exc
    if not ok:
        raise NotDecomposable("recomposed matrix differs from g")
    return coords


def conj_on_Z(p):
    """Scalar by which p acts on the center Z under conjugation: lam^2."""
    return p.lam * p.lam


def conj_on_UmodZ(p):
    """Matrix by which p acts on U/Z = K^{n-1}: (lam / theta) T."""
    return p.T.scale(p.lam / p.theta)


def in_MAZ(g):
    """Whether g lies in MAZ (decomposes with v = 0)."""
    try:
        coords = decompose_P(g)
    except (NotInP, NotDecomposable):
        return False
    return not any(coords.v)
