"""Random exact samples over Q(i) for property checks.

Every sampler takes a ``random.Random`` so runs are reproducible.  Unit
complex numbers come as z / conj(z), and unitary matrices come from the
Cayley transform of a skew-hermitian matrix, so no square roots are needed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chgeom import GroupElement, isotropic_point
from .linalg import Matrix, h_form
from .numfield import QI
from .parabolic import HeisenbergElement, ParabolicCoords, make_D

__all__ = [
    "rand_rational",
    "rand_gauss",
    "rand_unimodular",
    "rand_unitary",
    "rand_theta_T",
    "rand_heisenberg",
    "rand_parabolic",
    "rand_D",
    "rand_group_element",
    "rand_boundary_point",
    "swap_element",
    "default_rng",
]


def rand_rational(rng, size=6, den=4, nonzero=False):
    while True:
        q = Fraction(rng.randint(-size, size), rng.randint(1, den))
        if q or not nonzero:
            return q


def rand_gauss(rng, K=QI, size=6, den=3, nonzero=False):
    i = K.gen
    while True:
        z = rand_rational(rng, size, den) + rand_rational(rng, size, den) * i
        if z or not nonzero:
            return z


def rand_unimodular(rng, K=QI, size=5):
    z = rand_gauss(rng, K, size, 1, nonzero=True)
    u = z / z.conj()
    return u * K.gen ** rng.randrange(4)


def rand_unitary(rng, k, K=QI, size=3):
    """Random k x k unitary: D (I - A)(I + A)^{-1} with A skew-hermitian, D diagonal."""
    i = K.gen
    rows = [[K.zero] * k for _ in range(k)]
    for a in range(k):
        rows[a][a] = rand_rational(rng, size, 2) * i
        for c in range(a + 1, k):
            z = rand_gauss(rng, K, size, 2)
            rows[a][c] = z
            rows[c][a] = -z.conj()
    A = Matrix(K, rows)
    I = Matrix.identity(K, k)
    C = (I - A) @ (I + A).inverse()
    D = Matrix.diag(K, [rand_unimodular(rng, K) for _ in range(k)])
    return D @ C


def rand_theta_T(rng, k, K=QI):
    """(theta, T) with theta^2 det T = 1 and both blocks unitary; T has size k."""
    theta = rand_unimodular(rng, K)
    T0 = rand_unitary(rng, k, K)
    mu = (theta * theta * T0.det()).inverse()
    fix = Matrix.diag(K, [mu] + [1] * (k - 1))
    return theta, T0 @ fix


def rand_heisenberg(rng, n, K=QI):
    return HeisenbergElement(tuple(rand_gauss(rng, K) for _ in range(n - 1)), K.element(rand_rational(rng)))


def rand_parabolic(rng, n, K=QI, v_zero=False):
    lam = K.element(rand_rational(rng, 5, 3, nonzero=True))
    theta, T = rand_theta_T(rng, n - 1, K)
    if v_zero:
        v = (K.zero,) * (n - 1)
    else:
        v = tuple(rand_gauss(rng, K) for _ in range(n - 1))
        if not any(v):
            v = (K.one,) + v[1:]
    b = K.element(rand_rational(rng))
    return ParabolicCoords(lam, theta, T, v, b)


def rand_D(rng, n, K=QI):
    a = rand_rational(rng, 4, 3, nonzero=True)
    b, c = rand_rational(rng, 4, 3), rand_rational(rng, 4, 3)
    d = (1 + b * c) / a
    theta, T = rand_theta_T(rng, n - 1, K)
    return make_D(a, b, c, d, theta, T)


def swap_element(n, K=QI):
    """e_1 -> i e_{n+1}, e_{n+1} -> i e_1; an element of SU(h) outside P."""
    i = K.gen
    rows = [[K.zero] * (n + 1) for _ in range(n + 1)]
    rows[0][n] = rows[n][0] = i
    for k in range(1, n):
        rows[k][k] = K.one
    return GroupElement(Matrix(K, rows), h_form(n, K), _verified=True)


def rand_group_element(rng, n, K=QI):
    """p1 J p2 for random parabolic p1, p2 and the swap J."""
    p1 = rand_parabolic(rng, n, K).group()
    p2 = rand_parabolic(rng, n, K).group()
    return p1 @ swap_element(n, K) @ p2


def rand_boundary_point(rng, n, K=QI):
    from .chgeom import BoundaryPoint

    F = h_form(n, K)
    if rng.random() < 0.05:
        return BoundaryPoint(F, [1] + [0] * n)
    return isotropic_point(F, [rand_gauss(rng, K) for _ in range(n - 1)], rand_rational(rng))


def default_rng(seed=0):
    return random.Random(seed)
