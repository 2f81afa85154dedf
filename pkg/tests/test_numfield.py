import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chgkit.errors import (
    DivisionByZero,
    InvalidInvolution,
    MixedFields,
    NotMonic,
    ParseError,
    ReducibleDetected,
)
from chgkit.numfield import (
    QI,
    QQ,
    NumberField,
    char_poly,
    imaginary_unit,
    is_algebraic_integer,
    parse_element,
    parse_polynomial,
    parse_rational,
    span_contains,
    sqrt,
    subfield_generated,
)

X = sympy.Symbol("x")
K5 = NumberField([-1, -1, 1])  # golden ratio field
ZETA8 = NumberField([1, 0, 0, 0, 1], involution="-a^3")
CUBE2 = NumberField([-2, 0, 0, 1])

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def elements(field):
    return st.lists(rationals, min_size=field.degree, max_size=field.degree).map(field.element)


def _sympy_value(a):
    """The element as a sympy algebraic number via the field's generator."""
    root = sympy.CRootOf(sympy.Poly(list(reversed(a.field.poly)), X), 0)
    return sum(sympy.Rational(c.numerator, c.denominator) * root**k for k, c in enumerate(a.coeffs))


def test_gaussian_basics():
    i = QI.gen
    assert (1 + i) * (1 - i) == 2
    assert i.inverse() == -i
    assert str(i.inverse()) == "-a"
    assert (2 + 5 * i).conj() == 2 - 5 * i
    assert i * i == -1


def test_field_rejects_bad_polynomials():
    with pytest.raises(ReducibleDetected):
        NumberField([1, -2, 1])
    with pytest.raises(ReducibleDetected):
        NumberField([-8, 0, 0, 1])
    with pytest.raises(NotMonic):
        NumberField([1, 0, 2])
    with pytest.raises(NotMonic):
        NumberField([3])


def test_degree_one_field_is_q():
    assert QQ.degree == 1
    assert QQ.element(Fraction(3, 4)) * 4 == 3


def test_invalid_involution():
    with pytest.raises(InvalidInvolution):
        NumberField([1, 0, 1], involution="a + 1")


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        QI.gen + K5.gen


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QI.zero.inverse()
    with pytest.raises(ParseError):
        parse_element(QI, "1/(a-a)")


@settings(max_examples=60, deadline=None)
@given(elements(CUBE2), elements(CUBE2), elements(CUBE2))
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if x:
        assert x * x.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(elements(ZETA8))
def test_parse_print_round_trip(x):
    assert parse_element(ZETA8, str(x)) == x


def test_parse_grammar():
    a = parse_element(CUBE2, "3/2 + 5*a - 1/3*a^2")
    assert a.coeffs == (Fraction(3, 2), Fraction(5), Fraction(-1, 3))
    assert parse_element(CUBE2, " a ^ 3 ") == 2
    assert parse_element(QI, "(1+a)/2") * 2 == 1 + QI.gen
    assert parse_polynomial("x^2 - 5") == [-5, 0, 1]
    for bad in ["1//2", "a +", "b", "2**a"]:
        with pytest.raises(ParseError):
            parse_element(QI, bad)


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(7) == 7
    for bad in ["1//2", "1.5", "", "x"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


@settings(max_examples=30, deadline=None)
@given(elements(CUBE2))
def test_char_poly_matches_sympy(x):
    # oracle: sympy minimal polynomial of the algebraic number, raised to the right power
    ours = char_poly(x)
    mp = sympy.Poly(sympy.minimal_polynomial(_sympy_value(x), X), X)
    power = 3 // mp.degree()
    ref = sympy.Poly(mp.as_expr() ** power, X).monic()
    assert [sympy.Rational(c.numerator, c.denominator) for c in reversed(ours)] == ref.all_coeffs()


def test_integrality():
    assert is_algebraic_integer(QI.gen)
    assert is_algebraic_integer(1 + QI.gen)
    assert not is_algebraic_integer(QQ.element(Fraction(1, 2)))
    assert char_poly(K5.gen) == [-1, -1, 1]
    assert is_algebraic_integer(K5.gen)
    # (1 + sqrt5)/2 written in Q(sqrt 5) = Q[x]/(x^2 - 5)
    S5 = NumberField([-5, 0, 1])
    assert is_algebraic_integer((1 + S5.gen) / 2)
    assert not is_algebraic_integer((1 + S5.gen) / 3)


def test_char_poly_of_rational():
    assert char_poly(QI.element(Fraction(1, 2))) == [Fraction(1, 4), -1, 1]


def test_subfield_generated():
    F = NumberField([-2, 0, 0, 0, 1])
    b = subfield_generated([F.gen**2])
    assert len(b) == 2
    assert span_contains(b, F.element(7) + 3 * F.gen**2)
    assert not span_contains(b, F.gen)
    assert len(subfield_generated([F.gen + F.gen**2])) == 4


def test_sqrt():
    s = sqrt(ZETA8.element(2))
    assert s * s == 2
    assert sqrt(QI.element(2)) is None
    assert sqrt(QI.element(-4)) in (2 * QI.gen, -2 * QI.gen)
    assert sqrt(CUBE2.gen) is None
    z = (3 + 2 * CUBE2.gen) ** 2
    assert sqrt(z) ** 2 == z


def test_imaginary_unit():
    assert imaginary_unit(QI) == QI.gen
    i = imaginary_unit(ZETA8)
    assert i * i == -1 and i.conj() == -i
    assert imaginary_unit(K5) is None


def _rand_element(rng, K, den=4):
    return K.element([Fraction(rng.randint(-9, 9), rng.randint(1, den)) for _ in range(K.degree)])


@pytest.mark.parametrize("K", [QI, K5, ZETA8, CUBE2], ids=["QI", "K5", "ZETA8", "CUBE2"])
def test_inverse_and_conj_on_many_samples(K):
    rng = random.Random(K.degree)
    for _ in range(1000):
        x, y = _rand_element(rng, K), _rand_element(rng, K)
        if x:
            assert x.inverse() * x == 1
        if K.has_involution:
            assert x.conj().conj() == x
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x + y).conj() == x.conj() + y.conj()


def test_integers_closed_under_ring_operations():
    rng = random.Random(3)
    for K in (QI, K5, ZETA8):
        for _ in range(60):
            x, y = _rand_element(rng, K, den=1), _rand_element(rng, K, den=1)
            assert is_algebraic_integer(x + y) and is_algebraic_integer(x * y)
