import random
from fractions import Fraction

import pytest

from chgkit.chgeom import is_member
from chgkit.errors import ConstraintViolated, NotDecomposable, NotInP
from chgkit.linalg import Matrix, h_form
from chgkit.numfield import QI
from chgkit.parabolic import (
    HeisenbergElement,
    conj_on_UmodZ,
    conj_on_Z,
    decompose_P,
    in_MAZ,
    in_P,
    make_A,
    make_D,
    make_M,
    make_U,
    make_Z,
    stabilizes_plane,
    u_compose,
    u_inverse,
)
from chgkit.sampling import rand_D, rand_heisenberg, rand_parabolic, rand_theta_T, swap_element

i = QI.gen


def test_block_matrices():
    assert make_A(QI.one, 2).matrix == Matrix.identity(QI, 3)
    assert make_A(QI.element(2), 2).matrix == Matrix.diag(QI, [2, 1, Fraction(1, 2)])
    z = make_Z(3, 2, QI).matrix
    assert z == make_U((0,), 3, QI).matrix
    assert z[0, 2] == 3 * i
    m = make_M(i, Matrix(QI, [[-1]]))
    assert is_member(m.matrix, h_form(2, QI))
    with pytest.raises(ConstraintViolated):
        make_M(i, Matrix(QI, [[1]]))
    with pytest.raises(ConstraintViolated):
        make_A(i, 2)
    with pytest.raises(ConstraintViolated):
        make_U((1,), i, QI)


def test_u_entries():
    # ||v||^2 = 2 here, so the corner is i b - 1
    u = make_U((1 + i,), 4, QI).matrix
    assert u[0, 1] == -(1 - i)
    assert u[1, 2] == 1 + i
    assert u[0, 2] == 4 * i - 1


def test_u_compose_matches_matrices():
    rng = random.Random(0)
    for n in (2, 3, 4):
        for _ in range(30):
            x, y = rand_heisenberg(rng, n), rand_heisenberg(rng, n)
            z = u_compose(x, y)
            assert make_U(x.v, x.b, QI) @ make_U(y.v, y.b, QI) == make_U(z.v, z.b, QI)


def test_u_inverse():
    x = HeisenbergElement((1 + i, 2), QI.element(5))
    y = u_inverse(x)
    assert (make_U(x.v, x.b, QI) @ make_U(y.v, y.b, QI)).matrix == Matrix.identity(QI, 4)


def test_commutators_are_central():
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(20):
            x, y = rand_heisenberg(rng, n), rand_heisenberg(rng, n)
            a, b = make_U(x.v, x.b, QI), make_U(y.v, y.b, QI)
            c = a @ b @ a.inverse() @ b.inverse()
            coords = decompose_P(c)
            assert not any(coords.v)
            assert coords.lam == 1 and coords.T == Matrix.identity(QI, n - 1)


def test_decompose_round_trip():
    rng = random.Random(2)
    for n in (2, 3):
        for _ in range(40):
            c = rand_parabolic(rng, n)
            g = c.group()
            d = decompose_P(g)
            assert d.group() == g
            assert d.lam == abs(c.lam.rational_value())
            assert d.T == c.T and d.v == c.v and d.b == c.b


def test_decompose_rejects():
    with pytest.raises(NotInP):
        decompose_P(swap_element(2))
    bad = Matrix(QI, [[1, 0, 0], [0, 1, 0], [0, 1, 1]])
    with pytest.raises(NotDecomposable):
        decompose_P(bad)


def test_conjugation_on_center():
    rng = random.Random(3)
    for n in (2, 3):
        for _ in range(20):
            p = rand_parabolic(rng, n)
            b = QI.element(rng.randint(-7, 7))
            lhs = p.group() @ make_Z(b, n, QI) @ p.group().inverse()
            assert lhs == make_Z(conj_on_Z(p) * b, n, QI)


def test_conjugation_on_quotient():
    rng = random.Random(4)
    for n in (2, 3):
        for _ in range(20):
            p = rand_parabolic(rng, n)
            u = rand_heisenberg(rng, n)
            w = decompose_P(p.group() @ make_U(u.v, u.b, QI) @ p.group().inverse())
            assert w.v == conj_on_UmodZ(p).apply(u.v)


def test_make_D_stabilizes_plane():
    rng = random.Random(5)
    for n in (2, 3):
        for _ in range(5):
            assert stabilizes_plane(rand_D(rng, n))
    theta, T = rand_theta_T(rng, 1)
    with pytest.raises(ConstraintViolated):
        make_D(1, 1, 1, 1, theta, T)


def test_in_maz_biconditional():
    rng = random.Random(6)
    for n in (2, 3):
        for k in range(20):
            g = rand_parabolic(rng, n, v_zero=k % 2 == 0).group()
            if k % 3 == 0:
                g = g @ make_Z(rng.randint(-3, 3), n, QI)
            assert in_MAZ(g) == (in_P(g) and stabilizes_plane(g))
            assert in_MAZ(g) == (k % 2 == 0)
    assert not in_MAZ(swap_element(2))
