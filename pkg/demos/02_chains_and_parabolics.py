"""
Chains and the parabolic subgroup
=================================

We work with the standard form of signature (2, 1) over Q(i), where e_1
and e_3 are isotropic.  Chains are planes of signature (1, 1); the
stabilizer of the line through e_1 factors as M A U.
"""

import random

from chgkit.chgeom import BoundaryPoint, act, chain_points, chain_through, isotropic_point, on_chain
from chgkit.linalg import h_form, restricted_signature
from chgkit.numfield import QI
from chgkit.parabolic import decompose_P, in_MAZ, make_U, u_compose
from chgkit.sampling import rand_group_element, rand_heisenberg, rand_parabolic

rng = random.Random(1)
F = h_form(2, QI)
i = QI.gen

# Isotropic points: infinity (e_1) and a parametric family through the origin e_3
inf = BoundaryPoint(F, [1, 0, 0])
p = isotropic_point(F, [1 + i], 2)
print("p =", p)

# The chain through two points, stored in reduced echelon form
c = chain_through(inf, p)
print("chain:", c, "signature", restricted_signature(F, c.basis))
for x in chain_points(c, [-1, 3]):
    print("  on chain:", x, on_chain(x, c))

# Group elements move chains to chains
g = rand_group_element(rng, 2)
print("g(chain) == chain through g(inf), g(p):", act(g, c) == chain_through(act(g, inf), act(g, p)))

# Heisenberg coordinates multiply like (v1 + v2, b1 + b2 - Im <v1, v2>)
x, y = rand_heisenberg(rng, 2), rand_heisenberg(rng, 2)
z = u_compose(x, y)
print("law agrees with matrices:", make_U(x.v, x.b, QI) @ make_U(y.v, y.b, QI) == make_U(z.v, z.b, QI))

# Any element of P can be split back into (lam, theta, T, v, b)
coords = rand_parabolic(rng, 2)
back = decompose_P(coords.group())
print("lam, theta, v, b:", back.lam, back.theta, back.v, back.b)
print("in MAZ:", in_MAZ(coords.group()), "(v is nonzero)")
