"""Archimedean embeddings and certified sign determination.

A :class:`RealEmbedding` pins a real root of the defining polynomial by a
rational isolating interval (verified with a Sturm sequence) and refines it
by bisection.  A :class:`ComplexEmbedding` pins a non-real root by a
Gaussian-rational disk whose single-root property is certified with
Pellet's test, refined by Newton steps on a dyadic grid.  Both report the
sign of an element's (real) image exactly: zero is decided by the
coefficient test, and nonzero values are separated from 0 by refinement.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .errors import EmbeddingError, NotRealElement
from .numfield import poly_deriv, poly_divmod, poly_eval, poly_trim

__all__ = [
    "Sign",
    "RealEmbedding",
    "ComplexEmbedding",
    "real_embeddings",
    "default_embedding",
    "certified_sign",
]

_MAX_REFINEMENTS = 4000


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _sgn(q):
    return (q > 0) - (q < 0)


# ---------------------------------------------------------------------------
# real roots


def sturm_sequence(p):
    seq = [poly_trim(Fraction(c) for c in p)]
    seq.append(poly_deriv(seq[0]))
    while len(seq[-1]) > 1:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _variations(seq, x):
    signs = [s for s in (_sgn(poly_eval(q, x)) for q in seq) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _count_roots(seq, lo, hi):
    """Number of distinct real roots in (lo, hi]."""
    return _variations(seq, lo) - _variations(seq, hi)


def _isolate_real_roots(p):
    seq = sturm_sequence(p)
    bound = 1 + max(abs(Fraction(c)) for c in p[:-1])
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = _count_roots(seq, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.extend([(lo, mid), (mid, hi)])
    return sorted(out)


def _imul(x, y):
    prods = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return (min(prods), max(prods))


def _ieval(coeffs, lo, hi):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _imul(acc, (lo, hi))
        acc = (acc[0] + c, acc[1] + c)
    return acc


class RealEmbedding:
    """Real embedding given by an isolating interval (lo, hi] of a root of p."""

    kind = "real"

    def __init__(self, field, lo, hi):
        self.field = field
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise EmbeddingError("empty isolating interval")
        p = list(field.poly)
        self._exact = None
        if lo == hi:
            if poly_eval(p, lo) != 0:
                raise EmbeddingError("degenerate interval is not a root")
            self._exact = lo
        elif _count_roots(sturm_sequence(p), lo, hi) != 1:
            raise EmbeddingError(f"({lo}, {hi}] does not isolate exactly one root")
        elif poly_eval(p, hi) == 0:
            self._exact = hi
        self.lo, self.hi = lo, hi

    def _bisect(self, lo, hi):
        p = self.field.poly
        mid = (lo + hi) / 2
        pm = poly_eval(p, mid)
        if pm == 0:
            return mid, mid
        if _sgn(poly_eval(p, lo)) * _sgn(pm) < 0:
            return lo, mid
        return mid, hi

    def refined(self, width):
        """A copy whose interval is narrower than ``width``."""
        lo, hi = self.lo, self.hi
        while self._exact is None and hi - lo >= width:
            lo, hi = self._bisect(lo, hi)
            if lo == hi:
                break
        return RealEmbedding(self.field, lo, hi)

    def sign(self, a):
        if not a:
            return Sign.ZERO
        c = a.coeffs
        if self._exact is not None:
            return Sign(_sgn(poly_eval(c, self._exact)))
        lo, hi = self.lo, self.hi
        for _ in range(_MAX_REFINEMENTS):
            ilo, ihi = _ieval(c, lo, hi)
            if ilo > 0:
                return Sign.POSITIVE
            if ihi < 0:
                return Sign.NEGATIVE
            lo, hi = self._bisect(lo, hi)
            if lo == hi:
                return Sign(_sgn(poly_eval(c, lo)))
        raise EmbeddingError("sign refinement did not terminate (is p irreducible?)")

    def __repr__(self):
        return f"RealEmbedding({self.field!r}, {self.lo}, {self.hi})"


def real_embeddings(field, width=Fraction(1, 2**64)):
    """All real embeddings of ``field``, ascending, each pre-refined to ``width``."""
    return [RealEmbedding(field, lo, hi).refined(width) for lo, hi in _isolate_real_roots(list(field.poly))]


# ---------------------------------------------------------------------------
# complex roots (Gaussian rationals as (re, im) pairs)


def _cadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cdiv(x, y):
    n = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) / n, (x[1] * y[0] - x[0] * y[1]) / n)


def _ceval(coeffs, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _cmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def _taylor(coeffs, c):
    """Coefficients of q(w) = A(c + w), lowest degree first."""
    b = [(Fraction(x), Fraction(0)) for x in poly_trim(coeffs)]
    n = len(b) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            b[j] = _cadd(b[j], _cmul(c, b[j + 1]))
    return b


def _mod_upper(z):
    return abs(z[0]) + abs(z[1])


def _mod_lower(z):
    return max(abs(z[0]), abs(z[1]))


def _round(q, bits):
    scale = 1 << bits
    return Fraction(round(q * scale), scale)


def _pellet_radius(p, c):
    """Radius r such that |w - c| < r holds exactly one root, or None."""
    b = _taylor(p, c)
    u0 = _mod_upper(b[0])
    if u0 == 0:
        return Fraction(0)
    l1 = _mod_lower(b[1]) if len(b) > 1 else Fraction(0)
    if l1 == 0:
        return None
    r = 2 * u0 / l1
    return r if _pellet_holds(b, r) else None


def _pellet_holds(b, r):
    """Exactly one root of the shifted polynomial ``b`` in the disk |w| < r."""
    if len(b) < 2:
        return False
    rest = _mod_upper(b[0]) + sum(_mod_upper(bk) * r**k for k, bk in enumerate(b) if k >= 2)
    return _mod_lower(b[1]) * r > rest


class ComplexEmbedding:
    """Embedding sending the generator into a certified disk around ``center``."""

    kind = "complex"

    def __init__(self, field, center, radius=None, bits=64):
        self.field = field
        c = (Fraction(center[0]), Fraction(center[1]))
        r = _pellet_radius(list(field.poly), c)
        if r is None or (radius is not None and r > Fraction(radius)):
            raise EmbeddingError(f"cannot certify a single root near {c}")
        self.center, self.radius, self.bits = c, r, bits

    def refined(self):
        """A copy with a strictly smaller certified disk (one Newton step)."""
        if self.radius == 0:
            return self
        p = list(self.field.poly)
        c = self.center
        step = _cdiv(_ceval(p, c), _ceval(poly_deriv(p), c))
        bits = 2 * self.bits
        new = (_round(c[0] - step[0], bits), _round(c[1] - step[1], bits))
        try:
            out = ComplexEmbedding(self.field, new, bits=bits)
        except EmbeddingError:
            out = None
        if out is None or out.radius >= self.radius:
            raise EmbeddingError("Newton refinement failed to shrink the root disk")
        return out

    def _disk(self, coeffs):
        """(value at center, error bound) for the image of the element."""
        b = _taylor(coeffs, self.center)
        r = self.radius
        bound = sum(_mod_upper(bk) * r**k for k, bk in enumerate(b) if k >= 1)
        return (b[0] if b else (Fraction(0), Fraction(0))), bound

    def sign(self, a):
        if not a:
            return Sign.ZERO
        emb = self
        for _ in range(_MAX_REFINEMENTS):
            val, bound = emb._disk(a.coeffs)
            if abs(val[0]) > bound:
                return Sign(_sgn(val[0]))
            if abs(val[1]) > bound:
                raise NotRealElement(f"{a} has a non-real image under this embedding")
            emb = emb.refined()
        raise EmbeddingError("sign refinement did not terminate")

    def compatible_with_involution(self, tries=6):
        """Whether image(conj(x)) is the complex conjugate of image(x), certified."""
        if not self.field.has_involution:
            return False
        j = self.field.involution_image.coeffs
        emb = self
        for _ in range(tries):
            val, bound = emb._disk(j)
            cbar = (emb.center[0], -emb.center[1])
            diff = (val[0] - cbar[0], val[1] - cbar[1])
            if emb.radius == 0 and bound == 0:
                return diff == (0, 0)
            # the conjugate of a single-root disk holds exactly the conjugate root
            reach = _mod_upper(diff) + bound
            if reach < emb.radius or _pellet_holds(_taylor(list(self.field.poly), cbar), 2 * reach):
                return True
            if _mod_lower(diff) > bound + emb.radius:
                return False
            emb = emb.refined()
        return False

    def __repr__(self):
        re, im = (float(x) for x in self.center)
        return f"ComplexEmbedding({self.field!r}, center~{re:.6g}{im:+.6g}i, radius<={float(self.radius):.3g})"


def _complex_seeds(field, dps=40):
    import mpmath

    with mpmath.workdps(dps):
        roots = mpmath.polyroots([int(c) for c in reversed(field.poly)], maxsteps=400, extraprec=4 * dps)
        seeds = []
        for z in roots:
            if mpmath.im(z) > mpmath.mpf(10) ** (-dps // 2):
                seeds.append((Fraction(mpmath.nstr(mpmath.re(z), dps)), Fraction(mpmath.nstr(mpmath.im(z), dps))))
    seeds.sort(key=lambda z: (-z[0], -z[1]))
    return [(_round(re, 128), _round(im, 128)) for re, im in seeds]


@lru_cache(maxsize=None)
def default_embedding(field):
    """The designated archimedean embedding of ``field``.

    With a nontrivial involution: the first complex root (upper half plane,
    largest real part first) on which the involution acts as complex
    conjugation.  Otherwise: the largest real root, or failing that the
    first upper-half-plane complex root.
    """
    nontrivial = field.has_involution and field.involution_image != field.gen
    if not nontrivial:
        reals = real_embeddings(field)
        if reals:
            return reals[-1]
    for seed in _complex_seeds(field):
        emb = ComplexEmbedding(field, seed, bits=128)
        if not nontrivial or emb.compatible_with_involution():
            return emb
    raise EmbeddingError(f"no archimedean embedding of {field!r} is compatible with its involution")


def certified_sign(a, emb=None):
    """Exact sign of the image of a real element ``a`` under ``emb``.

    ``a`` must be fixed by the field's involution, or the embedding must be
    real.  Raises NotRealElement otherwise.
    """
    if not a:
        return Sign.ZERO
    if a.is_rational():
        return Sign(_sgn(a.coeffs[0]))
    field = a.field
    if emb is None:
        emb = default_embedding(field)
    if field.has_involution and a.conj() != a:
        raise NotRealElement(f"{a} is not fixed by the involution")
    if emb.kind == "complex" and not field.has_involution:
        raise NotRealElement("no involution: cannot certify that the image is real")
    return emb.sign(a)
