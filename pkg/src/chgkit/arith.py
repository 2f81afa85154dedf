"""Lattices of simplest type over Z[i], word balls and adjoint traces.

The lattice is SU(h, Z[i]) for the standard form h over Q(i).  Generators
are a curated finite set of integral elements; a word ball is a finite
sample of the group they generate, not a proof of generation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .chgeom import GroupElement, is_member, standard_subgroup_embed
from .errors import BadRange, DimensionMismatch
from .linalg import HermitianForm, Matrix, h_form
from .numfield import QI, QQ, NumberField, char_poly, is_algebraic_integer, subfield_generated
from .parabolic import make_U

__all__ = [
    "LatticeSpec",
    "WordBall",
    "Integrality",
    "ObstructionResult",
    "simplest_lattice",
    "lattice_membership",
    "default_generators",
    "word_ball",
    "sublattice_embed",
    "adjoint_trace",
    "adjoint_matrix",
    "adjoint_trace_bruteforce",
    "obstruction_check",
    "trace_field",
]


@dataclass(frozen=True)
class LatticeSpec:
    """SU(form) with entries in the ring of integers of ``field``.

    ``kind`` is ``"complex"`` (Z[i] entries, hermitian form) or ``"real"``
    (Z entries over Q, where the form is a quadratic form).
    """

    n: int
    field: NumberField
    form: HermitianForm
    kind: str = "complex"

    @property
    def ring(self):
        return "Z[i]" if self.kind == "complex" else "Z"


def simplest_lattice(n):
    """Lattice description for SU(h, Z[i]) in dimension n + 1."""
    if n < 1:
        raise BadRange("n must be at least 1")
    return LatticeSpec(n, QI, h_form(n, QI))


def lattice_membership(g, spec):
    M = g.matrix if isinstance(g, GroupElement) else g
    if M.shape != (spec.n + 1, spec.n + 1):
        raise DimensionMismatch(f"matrix shape {M.shape} does not match n = {spec.n}")
    if M.field != spec.field:
        return False
    return M.is_integral() and is_member(M, spec.form)


def default_generators(spec):
    """Curated integral elements of SU(h, Z[i]); each one is re-verified."""
    n, K = spec.n, spec.field
    if n < 2:
        raise BadRange("default generators need n >= 2")
    if spec.kind != "complex":
        raise BadRange("default generators are defined for the complex lattice")
    i = K.gen
    zero = [K.zero] * (n - 1)
    cands = []
    for k in range(n - 1):
        for c in (1 + i, i - 1):
            v = list(zero)
            v[k] = c
            cands.append(make_U(v, 0, K).matrix)
    cands.append(make_U(zero, 1, K).matrix)

    # e_1 <-> e_{n+1} with outer block [[0, i], [i, 0]]; the plain swap has det -1
    rows = [[K.zero] * (n + 1) for _ in range(n + 1)]
    rows[0][n] = rows[n][0] = i
    for k in range(1, n):
        rows[k][k] = K.one
    cands.append(Matrix(K, rows))

    cands.append(Matrix.diag(K, [i, -1] + [1] * (n - 2) + [i]))
    if n >= 3:
        cands.append(Matrix.diag(K, [1, i, -i] + [1] * (n - 3) + [1]))

    gens = []
    for M in cands:
        if lattice_membership(M, spec):
            gens.append(GroupElement(M, spec.form, _verified=True))
    return gens


@dataclass
class WordBall:
    generators: list
    radius: int
    elements: dict = dc_field(default_factory=dict)
    sizes: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements.values())

    def __contains__(self, g):
        M = g.matrix if isinstance(g, GroupElement) else g
        return M.key() in self.elements

    @property
    def field(self):
        return self.generators[0].field if self.generators else None


def word_ball(gens, radius, identity=None):
    """All products of at most ``radius`` factors from gens and their inverses.

    Expanded breadth-first from the sphere of the previous radius; entries
    are deduplicated by canonical matrix serialization.  ``sizes[r]`` is the
    size of the ball of radius r.
    """
    if radius < 0:
        raise BadRange("radius must be nonnegative")
    gens = list(gens)
    if identity is None:
        if not gens:
            raise ValueError("need generators or an explicit identity")
        f = gens[0].form
        identity = GroupElement(Matrix.identity(f.field, f.dim), f, _verified=True)
    steps = {}
    for g in gens:
        for x in (g, g.inverse()):
            steps.setdefault(x.matrix.key(), x)
    steps = list(steps.values())

    elements = {identity.matrix.key(): identity}
    sizes = [1]
    sphere = [identity]
    for _ in range(radius):
        nxt = []
        for w in sphere:
            for s in steps:
                p = w @ s
                k = p.matrix.key()
                if k not in elements:
                    elements[k] = p
                    nxt.append(p)
        sphere = nxt
        sizes.append(len(elements))
    return WordBall(gens, radius, elements, sizes)


def sublattice_embed(spec, kind, m):
    """Sub-lattice description on span(e_1..e_m, e_{n+1}) and the map into the ambient group.

    For ``kind="real"`` the sub-lattice is over Q and its form is the restricted
    h read as a real quadratic form; the map pushes Q-matrices into Q(i).
    """
    if kind == "complex":
        sub = LatticeSpec(m, spec.field, h_form(m, spec.field)) if 1 <= m <= spec.n else None
    elif kind == "real":
        sub = LatticeSpec(m, QQ, h_form(m, QQ), kind="real") if 2 <= m <= spec.n else None
    else:
        raise BadRange(f"unknown kind {kind!r}")
    if sub is None:
        raise BadRange(f"m = {m} out of range for kind {kind!r} and n = {spec.n}")

    def embed(A):
        return standard_subgroup_embed(kind, m, spec.n, A, field=spec.field)

    return sub, embed


# ---------------------------------------------------------------------------
# adjoint traces


def _matrix_and_inverse(g):
    if isinstance(g, GroupElement):
        return g.matrix, g.inverse().matrix
    return g, g.inverse()


def adjoint_trace(g):
    """Trace of X -> g X g^{-1} on trace-zero matrices: Tr(g) Tr(g^{-1}) - 1.

    Accepts a GroupElement or any invertible Matrix.
    """
    M, Minv = _matrix_and_inverse(g)
    return M.trace() * Minv.trace() - 1


def _sl_basis(K, N):
    basis = []
    for j in range(N):
        for k in range(N):
            if j != k:
                basis.append(("E", j, k))
    for j in range(N - 1):
        basis.append(("H", j, j))
    return basis


def _sl_matrix(K, N, b):
    rows = [[K.zero] * N for _ in range(N)]
    kind, j, k = b
    if kind == "E":
        rows[j][k] = K.one
    else:
        rows[j][j] = K.one
        rows[j + 1][j + 1] = -K.one
    return Matrix(K, rows)


def _sl_coords(Y, basis):
    N = Y.nrows
    # diagonal part sum c_j H_j has entries c_1, c_2 - c_1, ..., -c_{N-1}
    partial, acc = [], Y.field.zero
    for j in range(N - 1):
        acc = acc + Y[j, j]
        partial.append(acc)
    return [Y[j, k] if kind == "E" else partial[j] for kind, j, k in basis]


def adjoint_matrix(g):
    """Matrix of X -> g X g^{-1} on the basis E_jk (j != k), E_jj - E_{j+1,j+1}."""
    M, Minv = _matrix_and_inverse(g)
    K, N = M.field, M.nrows
    basis = _sl_basis(K, N)
    cols = [_sl_coords(M @ _sl_matrix(K, N, b) @ Minv, basis) for b in basis]
    return Matrix.from_columns(K, cols)


def adjoint_trace_bruteforce(g):
    return adjoint_matrix(g).trace()


class Integrality(enum.Enum):
    INTEGRAL = "Integral"
    NON_INTEGRAL = "NonIntegral"


@dataclass(frozen=True)
class ObstructionResult:
    verdict: Integrality
    t: object
    n: int
    ad_c: object
    ad_su: object
    witness: object = None

    @property
    def witness_char_poly(self):
        return None if self.witness is None else char_poly(self.witness)

    def to_json(self):
        from .numfield import format_polynomial

        out = {
            "verdict": self.verdict.value,
            "n": self.n,
            "trace": str(self.t),
            "ad_sl2": str(self.ad_c),
            "ad_su": str(self.ad_su),
        }
        if self.witness is not None:
            out["witness"] = str(self.witness)
            out["witness_char_poly"] = format_polynomial(self.witness_char_poly)
        return out


def obstruction_check(t, n):
    """Integrality of the adjoint traces attached to an SL_2 trace ``t``.

    Tr(Ad) on sl_2 is t^2 - 1.  Pushing diag(lam, 1/lam) into SU(n,1) as
    diag(lam^2, 1, ..., 1, lam^-2) gives (s + n - 1)^2 - 1 with s = t^2 - 2.
    The witness is the first non-integral of (su value, sl_2 value).
    """
    if n < 1:
        raise BadRange("n must be at least 1")
    if not hasattr(t, "field"):
        t = QQ.element(t)
    ad_c = t * t - 1
    s = t * t - 2
    ad_su = (s + (n - 1)) ** 2 - 1
    witness = None
    for val in (ad_su, ad_c):
        if not is_algebraic_integer(val):
            witness = val
            break
    verdict = Integrality.INTEGRAL if witness is None else Integrality.NON_INTEGRAL
    return ObstructionResult(verdict, t, n, ad_c, ad_su, witness)


def trace_field(ball):
    """Q-basis of the subfield generated by the adjoint traces in ``ball``."""
    elems = list(ball)
    if not elems:
        raise ValueError("empty ball")
    K = elems[0].field
    return subfield_generated([adjoint_trace(g) for g in elems], K)
