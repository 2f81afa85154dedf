import itertools
import random
from fractions import Fraction

import pytest
import sympy

from chgkit.arith import (
    Integrality,
    adjoint_matrix,
    adjoint_trace,
    adjoint_trace_bruteforce,
    default_generators,
    lattice_membership,
    obstruction_check,
    simplest_lattice,
    sublattice_embed,
    trace_field,
    word_ball,
)
from chgkit.chgeom import GroupElement, is_member, su_membership
from chgkit.errors import BadRange, DetNotOne, DimensionMismatch
from chgkit.linalg import Matrix, h_form
from chgkit.numfield import QI, QQ, NumberField, span_contains
from chgkit.parabolic import make_A, make_U
from chgkit.sampling import rand_group_element, rand_rational

i = QI.gen


@pytest.fixture(scope="module")
def spec2():
    return simplest_lattice(2)


@pytest.fixture(scope="module")
def ball2(spec2):
    return word_ball(default_generators(spec2), 2)


def test_membership_examples(spec2):
    assert lattice_membership(Matrix.identity(QI, 3), spec2)
    assert not lattice_membership(make_A(QI.element(2), 2), spec2)


def test_membership_of_u_matches_entry_inspection():
    # oracle: the corner i b - |v|^2/2 is in Z[i] iff |v|^2 is even
    spec = simplest_lattice(3)
    for a, b, c, d in itertools.product(range(-1, 2), repeat=4):
        v = (a + b * i, c + d * i)
        norm2 = a * a + b * b + c * c + d * d
        assert lattice_membership(make_U(v, 1, QI), spec) == (norm2 % 2 == 0)


def test_default_generators(spec2):
    gens = default_generators(spec2)
    assert gens
    assert all(lattice_membership(g, spec2) for g in gens)
    for g, h in itertools.product(gens, repeat=2):
        assert lattice_membership(g @ h, spec2)
    plain_swap = Matrix(QI, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    with pytest.raises(DetNotOne):
        su_membership(plain_swap, spec2.form)
    assert all(g.matrix != plain_swap for g in gens)
    assert len(default_generators(simplest_lattice(3))) > len(gens)


def test_ball_radius_zero_and_one(spec2):
    gens = default_generators(spec2)
    assert len(word_ball(gens, 0)) == 1
    ball1 = word_ball(gens, 1)
    expect = {Matrix.identity(QI, 3).key()}
    for g in gens:
        expect |= {g.matrix.key(), g.inverse().matrix.key()}
    assert set(ball1.elements) == expect


def test_ball_matches_direct_enumeration(spec2, ball2):
    # oracle: every word of length <= 2, multiplied out directly
    gens = default_generators(spec2)
    letters = [g.matrix for g in gens] + [g.inverse().matrix for g in gens]
    keys = {Matrix.identity(QI, 3).key()}
    for length in (1, 2):
        for word in itertools.product(letters, repeat=length):
            M = Matrix.identity(QI, 3)
            for x in word:
                M = M @ x
            keys.add(M.key())
    assert set(ball2.elements) == keys
    assert ball2.sizes == sorted(ball2.sizes)


def test_ball_elements_are_members(spec2, ball2):
    assert all(lattice_membership(g, spec2) for g in ball2)


def test_word_ball_rejects_negative_radius(spec2):
    with pytest.raises(BadRange):
        word_ball(default_generators(spec2), -1)


def test_sublattice_embed():
    spec = simplest_lattice(3)
    sub, embed = sublattice_embed(spec, "complex", 3)
    assert sub.form == spec.form
    sub, embed = sublattice_embed(spec, "complex", 2)
    assert sub.form.matrix == h_form(2, QI).matrix
    assert embed(Matrix.identity(QI, 3)).matrix == Matrix.identity(QI, 4)
    for g in default_generators(sub):
        assert lattice_membership(embed(g), spec)
    real, rembed = sublattice_embed(spec, "real", 2)
    assert real.field == QQ and real.ring == "Z"
    # the restricted form is 2 x1 x3 + x2^2 as a real quadratic form
    assert real.form.matrix == Matrix(QQ, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert lattice_membership(rembed(Matrix.identity(QQ, 3)), spec)
    with pytest.raises(BadRange):
        sublattice_embed(spec, "real", 1)
    with pytest.raises(BadRange):
        sublattice_embed(spec, "complex", 4)


def test_adjoint_trace_of_identity():
    for n in (2, 3, 4):
        assert adjoint_trace(Matrix.identity(QQ, n + 1)) == (n + 1) ** 2 - 1


def test_adjoint_trace_closed_form_matches_bruteforce(ball2):
    for g in ball2:
        assert adjoint_trace(g) == adjoint_trace_bruteforce(g)
    rng = random.Random(0)
    for n in (2, 3):
        for _ in range(3):
            g = rand_group_element(rng, n)
            assert adjoint_trace(g) == adjoint_trace_bruteforce(g)
            assert adjoint_matrix(g).nrows == (n + 1) ** 2 - 1


def test_adjoint_trace_from_split_torus():
    for lam in (QQ.element(2), QQ.element(Fraction(-3, 5)), 1 + i):
        K = lam.field
        g = Matrix.diag(K, [lam**2, 1, 1, lam**-2])
        s = lam**2 + lam**-2
        assert adjoint_trace(g) == s * s + 4 * s + 3
        assert adjoint_trace_bruteforce(g) == s * s + 4 * s + 3


def test_adjoint_trace_invariances(ball2):
    rng = random.Random(1)
    elems = list(ball2)
    for _ in range(20):
        g, h = rng.choice(elems), rng.choice(elems)
        assert adjoint_trace(h @ g @ h.inverse()) == adjoint_trace(g)
        t = adjoint_trace(g)
        assert t.conj() == t
    # the scalar i is a central element of SU(3,1)
    F = h_form(3, QI)
    zeta = su_membership(Matrix.diag(QI, [i] * 4), F)
    for _ in range(5):
        g = rand_group_element(rng, 3)
        assert adjoint_trace(zeta @ g) == adjoint_trace(g)


def test_obstruction_examples():
    r = obstruction_check(QQ.element(2), 3)
    assert r.verdict is Integrality.INTEGRAL
    assert (r.ad_c, r.ad_su) == (3, 15)
    r = obstruction_check(QQ.element(Fraction(1, 2)), 3)
    assert r.verdict is Integrality.NON_INTEGRAL
    assert r.witness == Fraction(-15, 16)
    assert r.witness_char_poly == [Fraction(15, 16), 1]


def test_obstruction_polynomials_symbolically():
    # oracle: sympy expansion of both routes
    t, n = sympy.symbols("t n")
    general = sympy.expand((t**2 + n - 3) ** 2 - 1)
    assert sympy.expand(general.subs(n, 3) - (t**4 - 1)) == 0
    s = t**2 - 2
    assert sympy.expand((s**2 + 4 * s + 3) - general.subs(n, 3)) == 0


def test_obstruction_two_ways():
    rng = random.Random(2)
    for _ in range(50):
        t = QQ.element(rand_rational(rng, 9, 6))
        s = t * t - 2
        r = obstruction_check(t, 3)
        assert r.ad_su == s * s + 4 * s + 3 == (t * t) ** 2 - 1
        integral = t.rational_value().denominator == 1
        assert (r.verdict is Integrality.INTEGRAL) == integral


def test_obstruction_in_quadratic_field():
    K = NumberField([-5, 0, 1])
    golden = (1 + K.gen) / 2
    assert obstruction_check(golden, 3).verdict is Integrality.INTEGRAL
    r = obstruction_check((1 + K.gen) / 3, 3)
    assert r.verdict is Integrality.NON_INTEGRAL
    assert r.witness.field == K


def test_trace_field(spec2, ball2):
    ident = GroupElement(Matrix.identity(QI, 3), spec2.form, _verified=True)
    ball0 = word_ball([ident], 0)
    assert trace_field(ball0) == [QI.one]
    basis = trace_field(ball2)
    assert all(b.conj() == b for b in basis)
    small = trace_field(word_ball(default_generators(spec2), 1))
    assert all(span_contains(basis, b) for b in small)


def test_membership_dimension_check(spec2):
    with pytest.raises(DimensionMismatch):
        lattice_membership(Matrix.identity(QI, 4), spec2)
    assert not is_member(Matrix.identity(QI, 4), spec2.form)


def test_split_torus_trace_for_general_n():
    # oracle: brute-force adjoint matrix; linear coefficient 2(n-1), constant (n-1)^2 - 1
    for n in (2, 4, 5):
        for lam in (QQ.element(2), QQ.element(Fraction(3, 7))):
            g = Matrix.diag(QQ, [lam**2] + [1] * (n - 1) + [lam**-2])
            s = lam**2 + lam**-2
            assert adjoint_trace_bruteforce(g) == s * s + 2 * (n - 1) * s + (n - 1) ** 2 - 1
            t = lam + lam.inverse()
            assert obstruction_check(t, n).ad_su == adjoint_trace(g)
