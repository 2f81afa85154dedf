"""A quick exact invariant suite, run by ``chgkit selftest``."""

from __future__ import annotations

import time

from . import arith, chgeom, parabolic, sampling
from .linalg import Matrix, h_form
from .numfield import QI, QQ, NumberField, is_algebraic_integer
from .propcheck import CurveData, Verdict, classify


def _heisenberg(rng):
    for n in (2, 3):
        for _ in range(25):
            x, y = sampling.rand_heisenberg(rng, n), sampling.rand_heisenberg(rng, n)
            z = parabolic.u_compose(x, y)
            lhs = parabolic.make_U(x.v, x.b, QI) @ parabolic.make_U(y.v, y.b, QI)
            if lhs != parabolic.make_U(z.v, z.b, QI):
                return False
    return True


def _langlands(rng):
    for n in (2, 3):
        for _ in range(20):
            g = sampling.rand_parabolic(rng, n).group()
            if parabolic.decompose_P(g).group() != g:
                return False
    return True


def _maz(rng):
    for n in (2, 3):
        for k in range(20):
            g = sampling.rand_parabolic(rng, n, v_zero=k % 2 == 0).group()
            expect = parabolic.in_P(g) and parabolic.stabilizes_plane(g)
            if parabolic.in_MAZ(g) != expect:
                return False
    return True


def _chains(rng):
    for n in (2, 3):
        F = h_form(n, QI)
        e1 = chgeom.BoundaryPoint(F, [1] + [0] * n)
        en = chgeom.BoundaryPoint(F, [0] * n + [1])
        c = chgeom.chain_through(e1, en)
        for _ in range(5):
            if chgeom.act(sampling.rand_D(rng, n), c) != c:
                return False
        for _ in range(5):
            p, q = sampling.rand_boundary_point(rng, n), sampling.rand_boundary_point(rng, n)
            if p == q:
                continue
            c = chgeom.chain_through(p, q)
            a, b = chgeom.chain_points(c, [1, -2])
            if chgeom.chain_through(a, b) != c or not chgeom.triple_on_chain(p, q, a):
                return False
    return True


def _adjoint(rng):
    for k in (2, 3, 4):
        if arith.adjoint_trace(Matrix.identity(QQ, k + 1)) != (k + 1) ** 2 - 1:
            return False
    for n in (2, 3):
        for _ in range(4):
            g = sampling.rand_group_element(rng, n)
            t = arith.adjoint_trace(g)
            if t != arith.adjoint_trace_bruteforce(g) or t.conj() != t:
                return False
    return True


def _obstruction(rng):
    r1 = arith.obstruction_check(QQ.element("1/2"), 3)
    r2 = arith.obstruction_check(2, 3)
    return (
        r1.verdict is arith.Integrality.NON_INTEGRAL
        and r1.witness == QQ.element("-15/16")
        and r2.verdict is arith.Integrality.INTEGRAL
    )


def _lattice(rng):
    spec = arith.simplest_lattice(2)
    ball = arith.word_ball(arith.default_generators(spec), 2)
    ok = all(arith.lattice_membership(g, spec) for g in ball)
    return ok and ball.sizes[0] < ball.sizes[1] < ball.sizes[2]


def _integers(rng):
    K5 = NumberField([-1, -1, 1])
    return (
        is_algebraic_integer(QI.gen)
        and is_algebraic_integer(1 + QI.gen)
        and not is_algebraic_integer(QQ.element("1/2"))
        and is_algebraic_integer(K5.gen)
    )


def _proportionality(rng):
    verdicts = [
        classify(CurveData(str(cc), cc, 3, compact=True)).verdict for cc in (-1, 0, -2)
    ]
    if verdicts != [Verdict.EQUALITY, Verdict.STRICT, Verdict.VIOLATION]:
        return False
    for _ in range(50):
        c = CurveData("r", *(sampling.rand_rational(rng) for _ in range(4)))
        k = abs(sampling.rand_rational(rng, nonzero=True))
        a, b = classify(c), classify(c.scaled(k))
        if (b.verdict, b.lhs, b.rhs) != (a.verdict, a.lhs * k, a.rhs * k):
            return False
    return True


CHECKS = [
    ("heisenberg group law", _heisenberg),
    ("Langlands round trip", _langlands),
    ("MAZ vs plane stabilizer", _maz),
    ("chain geometry", _chains),
    ("adjoint trace", _adjoint),
    ("obstruction", _obstruction),
    ("lattice word ball", _lattice),
    ("algebraic integers", _integers),
    ("proportionality classifier", _proportionality),
]


def run(out=print, seed=0):
    """Run every check; return True when all pass."""
    rng = sampling.default_rng(seed)
    ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            passed = fn(rng)
        except Exception as exc:  # report, never crash the suite
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok = ok and passed
        out(f"{'PASS' if passed else 'FAIL'}  {name}  [{time.perf_counter() - t0:.2f}s]")
    return ok


__all__ = ["CHECKS", "run"]
