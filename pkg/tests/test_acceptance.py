"""Acceptance checks: one test per criterion, all exact."""

import itertools
import random
from fractions import Fraction

import sympy

from chgkit.arith import (
    Integrality,
    adjoint_trace,
    adjoint_trace_bruteforce,
    adjoint_matrix,
    default_generators,
    lattice_membership,
    obstruction_check,
    simplest_lattice,
    word_ball,
)
from chgkit.chgeom import BoundaryPoint, act, chain_points, chain_through, on_chain, triple_on_chain
from chgkit.linalg import Matrix, h_form
from chgkit.numfield import QI, QQ, NumberField, char_poly, is_algebraic_integer
from chgkit.parabolic import (
    conj_on_UmodZ,
    conj_on_Z,
    decompose_P,
    in_MAZ,
    in_P,
    make_U,
    make_Z,
    stabilizes_plane,
    u_compose,
)
from chgkit.propcheck import CurveData, Verdict, classify
from chgkit.sampling import (
    rand_boundary_point,
    rand_D,
    rand_group_element,
    rand_heisenberg,
    rand_parabolic,
    rand_rational,
)


def test_01_adjoint_trace_of_split_torus_element():
    for lam in (QQ.element(2), 1 + QI.gen):
        K = lam.field
        g = Matrix.diag(K, [lam**2, 1, 1, lam**-2])
        s = lam**2 + lam**-2
        expect = s * s + 4 * s + 3
        assert adjoint_trace(g) == expect
        assert adjoint_matrix(g).shape == (15, 15)
        assert adjoint_trace_bruteforce(g) == expect


def test_02_obstruction_polynomial_and_verdicts():
    t = sympy.Symbol("t")
    n = 3
    assert sympy.expand((t**2 + n - 3) ** 2 - 1) == t**4 - 1
    r = obstruction_check(QQ.element(Fraction(1, 2)), 3)
    assert r.verdict is Integrality.NON_INTEGRAL
    assert r.witness == Fraction(-15, 16)
    assert obstruction_check(QQ.element(2), 3).verdict is Integrality.INTEGRAL


def test_03_adjoint_trace_of_identity_is_dimension():
    values = [adjoint_trace(Matrix.identity(QQ, n + 1)) for n in (2, 3, 4)]
    assert values == [8, 15, 24]


def test_04_heisenberg_law_and_central_commutators():
    rng = random.Random(2024)
    for n in (2, 3):
        for _ in range(1000):
            x, y = rand_heisenberg(rng, n), rand_heisenberg(rng, n)
            z = u_compose(x, y)
            assert make_U(x.v, x.b, QI) @ make_U(y.v, y.b, QI) == make_U(z.v, z.b, QI)
        for _ in range(100):
            x, y = rand_heisenberg(rng, n), rand_heisenberg(rng, n)
            a, b = make_U(x.v, x.b, QI), make_U(y.v, y.b, QI)
            c = decompose_P(a @ b @ a.inverse() @ b.inverse())
            assert not any(c.v) and c.lam == 1 and c.T == Matrix.identity(QI, n - 1)


def test_05_parabolic_decomposition_round_trip():
    rng = random.Random(5)
    for n in (2, 3):
        for _ in range(250):
            c = rand_parabolic(rng, n)
            g = c.group()
            d = decompose_P(g)
            assert d.group() == g
            assert (d.lam, d.theta) in ((c.lam, c.theta), (-c.lam, -c.theta))
            assert (d.T, d.v, d.b) == (c.T, c.v, c.b)


def test_06_maz_iff_plane_stabilizer():
    rng = random.Random(6)
    samples = []
    for k in range(150):
        g = rand_parabolic(rng, 2 + k % 2, v_zero=True).group()
        if k % 3 == 0:
            g = g @ make_Z(rng.randint(-5, 5), g.n, QI)
        samples.append((g, True))
    for k in range(50):
        samples.append((rand_parabolic(rng, 2 + k % 2).group(), False))
    for g, expect in samples:
        independent = in_P(g) and stabilizes_plane(g)
        assert in_MAZ(g) == independent == expect


def test_07_conjugation_actions_on_z_and_quotient():
    rng = random.Random(7)
    for k in range(200):
        n = 2 + k % 2
        p = rand_parabolic(rng, n)
        P = p.group()
        b = QI.element(rand_rational(rng))
        assert P @ make_Z(b, n, QI) @ P.inverse() == make_Z(conj_on_Z(p) * b, n, QI)
        u = rand_heisenberg(rng, n)
        w = decompose_P(P @ make_U(u.v, u.b, QI) @ P.inverse())
        assert w.v == conj_on_UmodZ(p).apply(u.v)


def test_08_chain_geometry():
    rng = random.Random(8)
    for n in (2, 3):
        F = h_form(n, QI)
        c0 = chain_through(BoundaryPoint(F, [1] + [0] * n), BoundaryPoint(F, [0] * n + [1]))
        for _ in range(10):
            assert act(rand_D(rng, n), c0) == c0
    done = hits = 0
    while done < 200:
        n = 2 + done % 2
        p, q = rand_boundary_point(rng, n), rand_boundary_point(rng, n)
        if p == q:
            continue
        c = chain_through(p, q)
        r = chain_points(c, [rng.randint(-6, 6)])[0] if done % 2 else rand_boundary_point(rng, n)
        expect = triple_on_chain(p, q, r)
        hits += expect
        for perm in itertools.permutations((p, q, r)):
            assert triple_on_chain(*perm) == expect
        g = rand_group_element(rng, n)
        assert triple_on_chain(act(g, p), act(g, q), act(g, r)) == expect
        a, b = chain_points(c, [rng.randint(1, 6), -rng.randint(1, 6)])
        assert on_chain(a, c) and on_chain(b, c)
        assert chain_through(a, b) == c
        done += 1
    assert 100 <= hits < 200


def test_09_word_ball_integrality_closure():
    spec = simplest_lattice(2)
    ball = word_ball(default_generators(spec), 3)
    assert all(lattice_membership(g, spec) for g in ball)
    assert ball.sizes[1] < ball.sizes[2] < ball.sizes[3]


def test_10_algebraic_integer_examples():
    assert is_algebraic_integer(QI.gen)
    assert is_algebraic_integer(1 + QI.gen)
    assert not is_algebraic_integer(QQ.element(Fraction(1, 2)))
    K = NumberField([-1, -1, 1])
    assert char_poly(K.gen) == [-1, -1, 1]
    assert is_algebraic_integer(K.gen)


def test_11_proportionality_classifier():
    got = [classify(CurveData(str(cc), cc, 3, compact=True)) for cc in (-1, 0, -2)]
    assert [(r.verdict, r.lhs, r.rhs) for r in got] == [
        (Verdict.EQUALITY, -3, -3),
        (Verdict.STRICT, 0, -3),
        (Verdict.VIOLATION, -6, -3),
    ]
    rng = random.Random(11)
    for k in range(500):
        compact = k % 4 == 0
        vals = [rand_rational(rng, 12, 6) for _ in range(4)]
        if compact:
            vals[2:] = [0, 0]
        c = CurveData(f"r{k}", *vals, compact=compact)
        scale = abs(rand_rational(rng, 9, 7, nonzero=True))
        a, b = classify(c), classify(c.scaled(scale))
        assert b.verdict is a.verdict
        assert (b.lhs, b.rhs) == (a.lhs * scale, a.rhs * scale)
