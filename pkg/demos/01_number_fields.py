"""
Number fields and algebraic integers
====================================

Everything in chgkit is exact: elements of Q[x]/(p) are rational coordinate
vectors in the power basis, and signs are certified, never guessed.
"""

from fractions import Fraction

from chgkit.embedding import certified_sign, default_embedding
from chgkit.numfield import QI, NumberField, char_poly, format_polynomial, is_algebraic_integer, parse_element, sqrt

# Q(i) ships with complex conjugation a -> -a
i = QI.gen
z = parse_element(QI, "3/2 + 5*a")
print("z       =", z)
print("conj(z) =", z.conj())
print("z*conj  =", z * z.conj())
print("1/z     =", z.inverse())

# integrality is decided by the characteristic polynomial
for x in [i, 1 + i, (1 + i) / 2]:
    print(f"{str(x):>12}  char poly {format_polynomial(char_poly(x))}  integral: {is_algebraic_integer(x)}")

# the golden ratio lives in Q[x]/(x^2 - x - 1)
K = NumberField([-1, -1, 1])
print("golden ratio char poly:", format_polynomial(char_poly(K.gen)), "integral:", is_algebraic_integer(K.gen))

# Q(zeta_8) has a square root of 2 and its own conjugation
Z8 = NumberField([1, 0, 0, 0, 1], involution="-a^3")
r2 = sqrt(Z8.element(2))
print("embedding used for signs:", default_embedding(Z8))
print("a square root of 2:", r2, " sign:", certified_sign(r2).name)
if certified_sign(r2).name == "NEGATIVE":
    r2 = -r2
print("the positive one:", r2, " squared:", r2 * r2)
print("1.41 < sqrt(2) < 1.42:", certified_sign(r2 - Fraction(141, 100)).name, certified_sign(r2 - Fraction(142, 100)).name)
