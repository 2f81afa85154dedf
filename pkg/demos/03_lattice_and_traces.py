"""
Word balls and adjoint traces
=============================

SU(h, Z[i]) is sampled by a word ball over a few hand-picked integral
generators.  Adjoint traces are computed by the closed form and checked
against the explicit adjoint matrix.
"""

from fractions import Fraction

from chgkit.arith import (
    adjoint_trace,
    adjoint_trace_bruteforce,
    default_generators,
    lattice_membership,
    obstruction_check,
    simplest_lattice,
    trace_field,
    word_ball,
)
from chgkit.numfield import QQ, NumberField, format_polynomial

spec = simplest_lattice(2)
gens = default_generators(spec)
print(len(gens), "generators")

ball = word_ball(gens, 3)
print("ball sizes by radius:", ball.sizes)
print("all integral members:", all(lattice_membership(g, spec) for g in ball))

# closed form vs brute force, one element per distinct trace value
seen = {}
for g in ball:
    seen.setdefault(adjoint_trace(g), g)
for t, g in sorted(seen.items(), key=lambda kv: kv[0].rational_value())[:8]:
    print(f"  Tr Ad = {str(t):>4}  brute force: {adjoint_trace_bruteforce(g)}")
print("field generated by the traces:", trace_field(ball))

# A hyperbolic SL_2 trace pushed into SU(3,1): integral traces stay integral
for t in [QQ.element(2), QQ.element(3), QQ.element(Fraction(1, 2))]:
    r = obstruction_check(t, 3)
    print(f"t = {str(t):>4}: {r.verdict.value:12} sl2 value {r.ad_c}, su(3,1) value {r.ad_su}")

K = NumberField([-5, 0, 1])
r = obstruction_check((1 + K.gen) / 3, 3)
print("t = (1 + sqrt5)/3:", r.verdict.value, "witness", r.witness, "char poly", format_polynomial(r.witness_char_poly))
