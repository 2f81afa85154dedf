"""SU(n,1) membership, standard subgroups, boundary points and chains.

Boundary points of complex hyperbolic n-space are isotropic lines for a
hermitian form of signature (n, 1); chains are the 2-dimensional subspaces
on which the form has signature (1, 1).  Points are normalized so the first
nonzero coordinate is 1 and chains are stored by the reduced echelon form
of their span, so equality is exact and syntactic.
"""

from __future__ import annotations

from .errors import (
    AllEqual,
    BadRange,
    DegenerateRestriction,
    DetNotOne,
    DimensionMismatch,
    EqualPoints,
    NotAChain,
    NotIsotropic,
    NotUnitary,
    SmallMatrixNotMember,
)
from .linalg import Matrix, form_eval, h_form, rank, restricted_signature, rref

__all__ = [
    "GroupElement",
    "BoundaryPoint",
    "Chain",
    "su_membership",
    "is_member",
    "standard_subgroup_embed",
    "chain_through",
    "on_chain",
    "triple_on_chain",
    "act",
    "isotropic_point",
    "chain_points",
]


class GroupElement:
    """An element of SU(H): g* H g = H and det g = 1.

    Build with :func:`su_membership`.  Products and inverses of members are
    members, so those are formed without re-running the check.
    """

    __slots__ = ("matrix", "form")

    def __init__(self, matrix, form, _verified=False):
        if not _verified:
            raise TypeError("use su_membership() to construct group elements")
        self.matrix = matrix
        self.form = form

    @property
    def n(self):
        return self.form.n

    @property
    def field(self):
        return self.matrix.field

    def __matmul__(self, other):
        if isinstance(other, GroupElement):
            if other.form != self.form:
                raise DimensionMismatch("group elements preserve different forms")
            return GroupElement(self.matrix @ other.matrix, self.form, _verified=True)
        return NotImplemented

    def inverse(self):
        # g^{-1} = H^{-1} g* H for g preserving H
        Hm = self.form.matrix
        return GroupElement(self.form.inverse_matrix @ self.matrix.H @ Hm, self.form, _verified=True)

    def apply(self, v):
        return self.matrix.apply(tuple(v))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix and self.form == other.form

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"GroupElement({self.matrix.to_json()})"


def su_membership(A, H):
    """Return ``A`` as a GroupElement of SU(H), or raise NotUnitary / DetNotOne."""
    if isinstance(A, GroupElement):
        A = A.matrix
    if A.shape != H.matrix.shape:
        raise DimensionMismatch(f"matrix shape {A.shape} does not match form dimension {H.dim}")
    if A.H @ H.matrix @ A != H.matrix:
        raise NotUnitary("matrix does not preserve the hermitian form")
    if A.det() != 1:
        raise DetNotOne(f"determinant is {A.det()}, not 1")
    return GroupElement(A, H, _verified=True)


def is_member(A, H):
    try:
        su_membership(A, H)
    except (NotUnitary, DetNotOne, DimensionMismatch):
        return False
    return True


def standard_subgroup_embed(kind, m, n, A_small, field=None):
    """Embed SU(m,1) (``kind="complex"``) or its real points (``"real"``) into SU(n,1).

    The small group acts on span(e_1, ..., e_m, e_{n+1}), preserving the
    restriction of the standard form, and the embedded element fixes
    e_{m+1}, ..., e_n.  ``field`` is the ambient field (default: the field of
    ``A_small``); rational small matrices can be pushed into a larger field.
    For the real kind the full real form-preserving group is accepted; no
    identity-component test is made.
    """
    if kind not in ("complex", "real"):
        raise BadRange(f"unknown kind {kind!r}")
    lo = 1 if kind == "complex" else 2
    if not lo <= m <= n:
        raise BadRange(f"need {lo} <= m <= n for kind {kind!r}, got m={m}, n={n}")
    if isinstance(A_small, GroupElement):
        A_small = A_small.matrix
    if A_small.shape != (m + 1, m + 1):
        raise DimensionMismatch(f"small matrix must be {(m + 1, m + 1)}, got {A_small.shape}")
    if kind == "real" and not all(x.is_real() for r in A_small.rows for x in r):
        raise SmallMatrixNotMember("real embedding needs a matrix with involution-fixed entries")
    if not is_member(A_small, h_form(m, A_small.field)):
        raise SmallMatrixNotMember(f"matrix is not in SU({m},1)")
    if field is not None and field != A_small.field:
        A_small = A_small.change_field(field)
    K = A_small.field
    idx = list(range(m)) + [n]
    rows = [[K.one if i == j else K.zero for j in range(n + 1)] for i in range(n + 1)]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            rows[i][j] = A_small[a, b]
    return su_membership(Matrix(K, rows), h_form(n, K))


# ---------------------------------------------------------------------------
# boundary points and chains


def _normalize(v):
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector does not define a line")
    inv = lead.inverse()
    return tuple(x * inv for x in v)


class BoundaryPoint:
    """An isotropic line, represented by its normalized spanning vector."""

    __slots__ = ("form", "rep")

    def __init__(self, form, v):
        v = tuple(form.field.element(x) for x in v)
        if len(v) != form.dim:
            raise DimensionMismatch(f"point of length {len(v)} for dimension {form.dim}")
        if not any(v):
            raise NotIsotropic("zero vector")
        if form_eval(form, v, v):
            raise NotIsotropic("vector is not isotropic")
        self.form = form
        self.rep = _normalize(v)

    def __eq__(self, other):
        return isinstance(other, BoundaryPoint) and self.rep == other.rep and self.form == other.form

    def __hash__(self):
        return hash(self.rep)

    def to_json(self):
        return [str(x) for x in self.rep]

    def __repr__(self):
        return f"BoundaryPoint({self.to_json()})"


class Chain:
    """A 2-dimensional subspace on which the form has signature (1, 1)."""

    __slots__ = ("form", "basis", "normal_form", "signature")

    def __init__(self, form, v, w, emb=None):
        K = form.field
        v = tuple(K.element(x) for x in v)
        w = tuple(K.element(x) for x in w)
        rows, piv = rref([v, w])
        if len(piv) < 2:
            raise NotAChain("basis vectors are dependent")
        try:
            sig = restricted_signature(form, [v, w], emb)
        except DegenerateRestriction as exc:
            raise NotAChain(str(exc)) from exc
        if sig != (1, 1):
            raise NotAChain(f"restricted signature is {sig}, not (1, 1)")
        self.form = form
        self.basis = (v, w)
        self.normal_form = rows
        self.signature = sig

    def contains(self, v):
        return rank(list(self.normal_form) + [tuple(v)]) == 2

    def __eq__(self, other):
        return isinstance(other, Chain) and self.normal_form == other.normal_form and self.form == other.form

    def __hash__(self):
        return hash(self.normal_form)

    def to_json(self):
        return {"basis": [[str(x) for x in b] for b in self.normal_form]}

    def __repr__(self):
        return f"Chain({self.to_json()['basis']})"


def chain_through(p, q):
    """The unique chain through two distinct boundary points."""
    if p == q:
        raise EqualPoints("a chain needs two distinct points")
    return Chain(p.form, p.rep, q.rep)


def on_chain(x, c):
    return c.contains(x.rep)


def triple_on_chain(p, q, r):
    """Whether three boundary points (not all equal) lie on a common chain."""
    if p == q == r:
        raise AllEqual("all three points coincide")
    return rank([p.rep, q.rep, r.rep]) == 2


def act(g, x):
    """Action of a group element on a boundary point or chain."""
    if isinstance(x, BoundaryPoint):
        return BoundaryPoint(x.form, g.apply(x.rep))
    if isinstance(x, Chain):
        v, w = x.basis
        return Chain(x.form, g.apply(v), g.apply(w))
    raise TypeError(f"cannot act on {type(x).__name__}")


def isotropic_point(form, middle, t):
    """The h-isotropic point (-|middle|^2/2 + i t, middle..., 1).

    Only valid for the standard form ``h_form(n, K)``; ``K`` needs an
    imaginary unit.  Together with e_1 these exhaust the boundary.
    """
    from .numfield import imaginary_unit

    K = form.field
    i = imaginary_unit(K)
    middle = [K.element(x) for x in middle]
    norm2 = sum((x.conj() * x for x in middle), K.zero)
    y1 = -norm2 / 2 + i * K.element(t)
    return BoundaryPoint(form, [y1] + middle + [K.one])


def chain_points(c, ts):
    """Boundary points p + i t conj(w) q on chain ``c``, with w = h(q, p)."""
    from .numfield import imaginary_unit

    K = c.form.field
    i = imaginary_unit(K)
    p, q = _isotropic_pair(c)
    w = form_eval(c.form, q, p)
    out = []
    for t in ts:
        beta = i * K.element(t) * w.conj()
        out.append(BoundaryPoint(c.form, [x + beta * y for x, y in zip(p, q)]))
    return out


def _isotropic_pair(c):
    """Two independent isotropic vectors spanning the chain."""
    from .numfield import imaginary_unit, sqrt

    F = c.form
    K = F.field
    v, w = c.basis
    iso = [b for b in (v, w) if not form_eval(F, b, b)]
    if len(iso) == 2:
        return v, w
    if iso:
        base = iso[0]
        o = w if base is v else v
        # h(o + s base) = h(o) + 2 Re(s g) with g = o* H base; pick s g real
        g = form_eval(F, base, o)
        s = -form_eval(F, o, o) / (2 * g)
        return base, tuple(x + s * y for x, y in zip(o, base))
    # neither isotropic: solve a + 2 t Re(s0 g) + t^2 d = 0 along s = t s0
    a, d, g = form_eval(F, v, v), form_eval(F, w, w), form_eval(F, w, v)
    i = imaginary_unit(K)
    found = []
    for s0 in [K.one] + ([i] if i is not None else []):
        re = (s0 * g + (s0 * g).conj()) / 2
        root = sqrt(re * re - a * d)
        if root is None:
            continue
        for t in ((-re + root) / d, (-re - root) / d):
            u = tuple(x + t * s0 * y for x, y in zip(v, w))
            if not form_eval(F, u, u) and u not in found:
                found.append(u)
        if len(found) >= 2 and rank(found[:2]) == 2:
            return found[0], found[1]
    raise NotAChain("the chain has no isotropic basis over this field")
