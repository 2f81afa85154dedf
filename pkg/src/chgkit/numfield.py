"""Exact arithmetic in number fields K = Q[x]/(p).

Elements are immutable and store their coordinates in the power basis
``1, a, ..., a^(d-1)``, where ``a`` is the class of ``x``.  Rationals are
:class:`fractions.Fraction`; nothing in this module touches floating point
except the numeric seeding in :func:`sqrt` for fields of degree >= 3, whose
output is always verified exactly.

Textual element grammar (``parse_element`` / ``str``)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | GEN | '(' expr ')'

``GEN`` is ``a`` for field elements and ``x`` for defining polynomials.
Whitespace is ignored.  ``str(e)`` prints the canonical form, lowest degree
first, e.g. ``3/2 + 5*a - 1/3*a^2``, and parsing it gives ``e`` back.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DivisionByZero,
    InvalidInvolution,
    MixedFields,
    NoInvolution,
    NotMonic,
    ParseError,
    ReducibleDetected,
)

__all__ = [
    "NumberField",
    "FieldElement",
    "QQ",
    "QI",
    "parse_rational",
    "parse_element",
    "parse_polynomial",
    "format_polynomial",
    "mult_matrix",
    "char_poly",
    "is_algebraic_integer",
    "subfield_generated",
    "sqrt",
    "imaginary_unit",
    "span_contains",
    "berkowitz",
]


# ---------------------------------------------------------------------------
# rational polynomials (coefficient lists, lowest degree first)


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] += pi * qj
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(q)
    if not q:
        raise DivisionByZero("polynomial division by zero")
    r = [Fraction(c) for c in poly_trim(p)]
    lead = Fraction(q[-1])
    quo = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q):
        c = r[-1] / lead
        shift = len(r) - len(q)
        quo[shift] = c
        for i, qi in enumerate(q):
            r[shift + i] -= c * qi
        r = poly_trim(r)
    return poly_trim(quo), r


def poly_gcd(p, q):
    """Monic gcd over Q."""
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def poly_deriv(p):
    return poly_trim(i * c for i, c in enumerate(p) if i > 0)


def poly_eval(p, x):
    """Horner evaluation; ``x`` may be anything closed under + and *."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def format_polynomial(p, var="x"):
    """Canonical text for a rational polynomial, lowest degree first."""
    terms = []
    for k, c in enumerate(p):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# parsing

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def parse_rational(text):
    """Parse ``"p/q"`` or an integer string (or int) into a Fraction."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"malformed rational {text!r}")
    value = Fraction(s)
    return value


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        elif op in "+-*/^()":
            tokens.append(("op", op))
        else:
            raise ParseError(f"unexpected character {op!r} in {text!r}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, gen_name, const, gen):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.gen_name = gen_name
        self.const = const
        self.gen = gen

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, what):
        raise ParseError(f"{what} in {self.text!r}")

    def parse(self):
        if not self.tokens:
            self.fail("empty expression")
        value = self.expr()
        if self.pos != len(self.tokens):
            self.fail(f"trailing input {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                self.fail("exponent must be an integer")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.const(Fraction(val))
        if kind == "name":
            if val != self.gen_name:
                self.fail(f"unknown symbol {val!r} (generator is {self.gen_name!r})")
            return self.gen()
        if (kind, val) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return value
        self.fail("unexpected end of input" if kind is None else f"unexpected {val!r}")


class _Poly:
    """Throwaway polynomial type used only by :func:`parse_polynomial`."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = poly_trim(c)

    @staticmethod
    def lift(o):
        return o if isinstance(o, _Poly) else _Poly([o])

    def __add__(self, o):
        return _Poly(poly_add(self.c, _Poly.lift(o).c))

    def __sub__(self, o):
        return _Poly(poly_sub(self.c, _Poly.lift(o).c))

    def __mul__(self, o):
        return _Poly(poly_mul(self.c, _Poly.lift(o).c))

    def __neg__(self):
        return _Poly([-x for x in self.c])

    def __truediv__(self, o):
        o = _Poly.lift(o)
        if len(o.c) != 1:
            raise ParseError("division by a non-constant polynomial")
        return _Poly([x / o.c[0] for x in self.c])

    def __pow__(self, k):
        if k < 0:
            raise ParseError("negative power of a polynomial")
        out = _Poly([1])
        for _ in range(k):
            out = out * self
        return out


def parse_polynomial(text, var="x"):
    """Parse a polynomial in ``var`` into a rational coefficient list."""
    p = _Parser(text, var, lambda q: _Poly([q]), lambda: _Poly([0, 1])).parse()
    return [Fraction(c) for c in p.c]


def parse_element(field, text):
    """Parse the element grammar (generator ``a``) into ``field``."""
    try:
        return _Parser(text, "a", field.element, lambda: field.gen).parse()
    except DivisionByZero as exc:
        raise ParseError(f"division by zero in {text!r}") from exc


# ---------------------------------------------------------------------------
# exact rational linear algebra helpers


def _rat_solve(M, rhs):
    """Solve M y = rhs over Q by Gaussian elimination; M square, nonsingular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise DivisionByZero("singular system")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


class _RationalSpan:
    """Reduced row echelon basis of a subspace of Q^d, grown incrementally."""

    def __init__(self, d):
        self.d = d
        self.rows = []  # (pivot, row) with row[pivot] == 1, fully reduced

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for piv, row in self.rows:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, v):
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        lead = v[piv]
        v = [x / lead for x in v]
        new_rows = []
        for p, row in self.rows:
            c = row[piv]
            if c:
                row = [x - c * y for x, y in zip(row, v)]
            new_rows.append((p, row))
        new_rows.append((piv, v))
        new_rows.sort(key=lambda pr: pr[0])
        self.rows = new_rows
        return True

    def __len__(self):
        return len(self.rows)


def berkowitz(M):
    """Characteristic polynomial det(xI - M), lowest degree first.

    Division-free (Berkowitz); entries only need +, - and *.
    """
    n = len(M)
    C = [1]  # highest degree first while building
    for k in range(n):
        a = M[k][k]
        R = [M[k][j] for j in range(k)]
        S = [M[i][k] for i in range(k)]
        t = [1, -a]
        vec = S
        for _ in range(k):
            t.append(-sum((r * s for r, s in zip(R, vec)), 0))
            vec = [sum((M[i][j] * vec[j] for j in range(k)), 0) for i in range(k)]
        # multiply the (k+2) x (k+1) lower Toeplitz matrix with first column t by C
        C = [sum((t[i - j] * C[j] for j in range(min(i, k) + 1)), 0) for i in range(k + 2)]
    return list(reversed(C))


# ---------------------------------------------------------------------------
# fields and elements


def _as_int_poly(poly):
    if isinstance(poly, str):
        poly = parse_polynomial(poly)
    out = []
    for c in poly:
        c = Fraction(c)
        if c.denominator != 1:
            raise NotMonic(f"defining polynomial must have integer coefficients, got {c}")
        out.append(int(c))
    return poly_trim(out)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def _has_integer_root(p):
    if p[0] == 0:
        return True
    return any(poly_eval(p, s * r) == 0 for r in _divisors(p[0]) for s in (1, -1))


class NumberField:
    """The field Q[x]/(p) for a monic irreducible integer polynomial ``p``.

    ``involution`` is the image of the generator under a field automorphism
    of order dividing 2, given in any form ``element`` accepts; it
    plays the role of complex conjugation in hermitian constructions.

    Irreducibility is verified for degree <= 3 only; for higher degree it is
    the caller's responsibility.  Squarefreeness is always checked.
    """

    def __init__(self, poly, involution=None):
        p = _as_int_poly(poly)
        if len(p) < 2:
            raise NotMonic(f"defining polynomial must have degree >= 1, got {p}")
        if p[-1] != 1:
            raise NotMonic(f"defining polynomial must be monic, leading coefficient {p[-1]}")
        d = len(p) - 1
        if d > 1 and len(poly_gcd(p, poly_deriv(p))) > 1:
            raise ReducibleDetected(f"{format_polynomial(p)} is not squarefree")
        if 2 <= d <= 3 and _has_integer_root(p):
            raise ReducibleDetected(f"{format_polynomial(p)} has a rational root")
        self.poly = tuple(p)
        self.degree = d
        # x^d = -sum_{j<d} p_j x^j
        self._xd = tuple(-c for c in p[:-1])
        self._conj = None
        self._inv_image = None
        if involution is not None:
            self._set_involution(involution)
        self._key = (self.poly, self._inv_image)
        self._hash = hash(self._key)

    def _set_involution(self, involution):
        if isinstance(involution, FieldElement):
            coeffs = involution.coeffs
        elif isinstance(involution, str):
            coeffs = _Parser(involution, "a", self._raw_element, lambda: self.gen).parse().coeffs
        else:
            coeffs = tuple(Fraction(c) for c in involution)
        if len(coeffs) != self.degree:
            raise InvalidInvolution("involution image has the wrong length")
        image = FieldElement(self, coeffs)
        if poly_eval(self.poly, image) != 0:
            raise InvalidInvolution("involution image is not a root of the defining polynomial")
        powers = [self.one]
        for _ in range(1, self.degree):
            powers.append(powers[-1] * image)
        # columns: images of basis monomials
        conj = tuple(tuple(powers[k].coeffs[j] for k in range(self.degree)) for j in range(self.degree))
        self._conj = conj
        if self.conjugate(image) != self.gen:
            self._conj = None
            raise InvalidInvolution("map does not square to the identity")
        self._inv_image = tuple(coeffs)
        self._conj_identity = image == self.gen

    # -- construction helpers -------------------------------------------------

    def _raw_element(self, q):
        return FieldElement(self, (Fraction(q),) + (Fraction(0),) * (self.degree - 1))

    @property
    def gen(self):
        if self.degree == 1:
            return FieldElement(self, (Fraction(-self.poly[0]),))
        return FieldElement(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    @property
    def one(self):
        return self._raw_element(1)

    @property
    def zero(self):
        return self._raw_element(0)

    def element(self, value):
        """Coerce an int, Fraction, coefficient list, string or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self._raw_element(value)
        if isinstance(value, str):
            return parse_element(self, value)
        coeffs = [Fraction(c) for c in value]
        if len(coeffs) > self.degree:
            # reduce an arbitrary polynomial in a
            return poly_eval(coeffs, self.gen) + self.zero
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    __call__ = element

    @property
    def has_involution(self):
        return self._conj is not None

    @property
    def involution_image(self):
        return None if self._inv_image is None else FieldElement(self, self._inv_image)

    def conjugate(self, a):
        if self._conj is None:
            raise NoInvolution("field has no designated involution")
        if self._inv_image is not None and self._conj_identity:
            return a
        c = a.coeffs
        return FieldElement(
            self, tuple(sum((row[k] * c[k] for k in range(self.degree) if c[k]), Fraction(0)) for row in self._conj)
        )

    def _mul(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        xd = self._xd
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                base = k - d
                for j, r in enumerate(xd):
                    if r:
                        prod[base + j] += c * r
        return tuple(Fraction(c) for c in prod[:d])

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        return self is other or (isinstance(other, NumberField) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inv = "" if self._inv_image is None else f", involution={str(self.involution_image)!r}"
        return f"NumberField({format_polynomial(self.poly)!r}{inv})"


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields("operands belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field._raw_element(other)
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.field, (self.coeffs[0] + other,) + self.coeffs[1:])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.field, tuple(x * other for x in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (1 / self.coeffs[0],))
        if self.is_rational():
            return FieldElement(self.field, (1 / self.coeffs[0],) + self.coeffs[1:])
        y = _rat_solve(mult_matrix(self), [1] + [0] * (d - 1))
        return FieldElement(self.field, tuple(y))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(self.field, tuple(x / other for x in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def conj(self):
        return self.field.conjugate(self)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def is_real(self):
        """Fixed by the designated involution (fields without one: rational only)."""
        if self.field.has_involution:
            return self.conj() == self
        return self.is_rational()

    def has_integral_coords(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __str__(self):
        return format_polynomial(self.coeffs, "a")

    def __repr__(self):
        return f"FieldElement({str(self)!r})"


# ---------------------------------------------------------------------------
# operations


def mult_matrix(a):
    """Matrix (rows of Fractions) of y -> a*y in the power basis."""
    f = a.field
    cols = []
    y = a
    for j in range(f.degree):
        cols.append(y.coeffs)
        if j + 1 < f.degree:
            y = y * f.gen
    return [[Fraction(cols[j][i]) for j in range(f.degree)] for i in range(f.degree)]


def char_poly(a):
    """Characteristic polynomial of multiplication by ``a``, lowest degree first."""
    return [Fraction(c) for c in berkowitz(mult_matrix(a))]


def is_algebraic_integer(a):
    """True iff ``a`` is integral over Z.

    The characteristic polynomial is a power of the minimal polynomial, and a
    monic rational polynomial with an integral power is itself integral.
    """
    return all(c.denominator == 1 for c in char_poly(a))


def subfield_generated(elems, field=None):
    """Q-basis (reduced echelon, canonical) of the subfield generated by ``elems``."""
    elems = list(elems)
    if field is None:
        if not elems:
            raise ValueError("field is required when elems is empty")
        field = elems[0].field
    for e in elems:
        if e.field != field:
            raise MixedFields("elements from different fields")
    span = _RationalSpan(field.degree)
    span.add(field.one.coeffs)
    for e in elems:
        span.add(e.coeffs)
    while True:
        basis = [field.element(row) for _, row in span.rows]
        grew = False
        for x, y in itertools.combinations_with_replacement(basis, 2):
            if span.add((x * y).coeffs):
                grew = True
        if not grew:
            break
    return [field.element(row) for _, row in span.rows]


def span_contains(basis, a):
    """Whether ``a`` lies in the Q-span of ``basis``."""
    span = _RationalSpan(a.field.degree)
    for b in basis:
        span.add(b.coeffs)
    return not any(span.reduce(a.coeffs))


# ---------------------------------------------------------------------------
# square roots


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _quadratic_sqrt(a):
    # a = u + w*gen with gen^2 + c1*gen + c0 = 0; gen = (-c1 + r)/2, r^2 = disc
    f = a.field
    c0, c1 = f.poly[0], f.poly[1]
    disc = Fraction(c1 * c1 - 4 * c0)
    u, w = a.coeffs
    U, W = u - w * c1 / 2, w / 2  # a = U + W*r
    r = 2 * f.gen + c1
    candidates = []
    if W == 0:
        s = _rational_sqrt(U)
        if s is not None:
            candidates.append(f.element(s))
        t = _rational_sqrt(U / disc)
        if t is not None:
            candidates.append(t * r)
    else:
        root_norm = _rational_sqrt(U * U - disc * W * W)
        if root_norm is not None:
            for z in ((U + root_norm) / 2, (U - root_norm) / 2):
                X = _rational_sqrt(z)
                if X:
                    candidates.append(X + (W / (2 * X)) * r)
    for s in candidates:
        if s * s == a:
            return s
    return None


@lru_cache(maxsize=None)
def _numeric_roots(field, dps):
    import mpmath

    with mpmath.workdps(dps):
        coeffs = [int(c) for c in reversed(field.poly)]
        return tuple(mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps))


def _numeric_sqrt(a, dps=60):
    import mpmath

    f = a.field
    d = f.degree
    if d > 12:
        return None
    roots = _numeric_roots(f, dps)
    with mpmath.workdps(dps):
        vals = [mpmath.sqrt(poly_eval([mpmath.mpf(c.numerator) / c.denominator for c in a.coeffs], z)) for z in roots]
        V = mpmath.matrix([[z**k for k in range(d)] for z in roots])
        for signs in itertools.product((1, -1), repeat=d - 1):
            rhs = mpmath.matrix([vals[0]] + [s * v for s, v in zip(signs, vals[1:])])
            try:
                sol = mpmath.lu_solve(V, rhs)
            except ZeroDivisionError:
                continue
            coeffs = []
            for k in range(d):
                c = sol[k]
                if abs(mpmath.im(c)) > mpmath.mpf(10) ** (-dps // 3):
                    break
                coeffs.append(Fraction(mpmath.nstr(mpmath.re(c), dps)).limit_denominator(10**18))
            else:
                s = f.element(coeffs)
                if s * s == a:
                    return s
    return None


def sqrt(a):
    """An element ``s`` with ``s*s == a``, or None if none was found.

    Exact for degree <= 2.  For higher degree the root is located numerically
    and then verified exactly, so a returned value is always a true root;
    None there means no root with moderate-height coordinates was found.
    """
    if not a:
        return a
    if a.is_rational():
        s = _rational_sqrt(a.coeffs[0])
        if s is not None:
            return a.field.element(s)
        if a.field.degree == 1:
            return None
    if a.field.degree == 2:
        return _quadratic_sqrt(a)
    return _numeric_sqrt(a)


@lru_cache(maxsize=None)
def imaginary_unit(field):
    """An element i with i^2 = -1 (and conj(i) = -i when an involution exists), or None."""
    g = field.gen
    cands = [g] if g * g == -1 else []
    s = sqrt(field.element(-1))
    if s is not None:
        cands.append(s)
    for i in cands:
        if not field.has_involution or i.conj() == -i:
            return i
    return None


QQ = NumberField([0, 1], involution=[0])
QI = NumberField([1, 0, 1], involution=[0, -1])
