"""Coefficient arithmetic: group laws, specialization, exactness."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhyperplane.qscalar import (NumericAssignment, QCoefficient, QExponent,
                                 QFraction, QPolynomial)

PAIRS = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def qc(scalar, exps=()):
    return QCoefficient(Fraction(scalar), QExponent(dict(exps)))


nonzero_scalars = st.fractions(min_value=-8, max_value=8).filter(lambda f: f != 0)
exponent_maps = st.dictionaries(st.sampled_from(PAIRS), st.integers(-4, 4), max_size=4)
coefficients = st.builds(lambda s, e: qc(s, e.items()), nonzero_scalars, exponent_maps)


def prime_assignment():
    return NumericAssignment.distinct_primes(4)


# -- spec examples ------------------------------------------------------------

def test_mul_inverse_pair_cancels():
    a = qc(1, {(1, 2): 1}.items())
    b = qc(1, {(1, 2): -1}.items())
    assert a * b == QCoefficient.one()


def test_mul_disjoint_monomials():
    a = qc(2, {(1, 2): 1}.items())
    b = qc(3, {(1, 3): 2}.items())
    assert a * b == qc(6, {(1, 2): 1, (1, 3): 2}.items())


def test_mul_zero_absorbs():
    assert QCoefficient.zero() * qc(5, {(1, 2): 3}.items()) == QCoefficient.zero()


def test_inverse_componentwise():
    assert qc(2, {(1, 2): 1}.items()).inverse() == qc(Fraction(1, 2), {(1, 2): -1}.items())
    assert QCoefficient.one().inverse() == QCoefficient.one()
    assert qc(-3, {(2, 3): -2}.items()).inverse() == qc(Fraction(-1, 3), {(2, 3): 2}.items())


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QCoefficient.zero().inverse()


def test_specialize_direct():
    nu = NumericAssignment({(1, 2): Fraction(3)})
    assert qc(1, {(1, 2): 2}.items()).specialize(nu) == 9
    nu2 = NumericAssignment({(1, 2): Fraction(2)})
    assert qc(Fraction(1, 2), {(1, 2): -1}.items()).specialize(nu2) == Fraction(1, 4)
    assert QCoefficient.one().specialize(nu) == 1


def test_specialize_missing_pair_raises():
    nu = NumericAssignment({(1, 2): Fraction(3)})
    with pytest.raises(KeyError):
        qc(1, {(1, 3): 1}.items()).specialize(nu)


def test_exponent_orientation():
    e = QExponent.of(3, 1, 2)         # q_31^2 stored as q_13^{-2}
    assert e.get(1, 3) == -2
    assert e.get(3, 1) == 2
    assert e.get(2, 2) == 0


def test_zero_is_canonical():
    z = QCoefficient(0, QExponent({(1, 2): 5}))
    assert z == QCoefficient.zero()
    assert z.exponent.is_trivial()


# -- group and homomorphism properties ---------------------------------------

@given(coefficients, coefficients, coefficients)
def test_multiplication_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * QCoefficient.one() == a
    assert a * a.inverse() == QCoefficient.one()
    assert a * b == b * a


@given(coefficients, coefficients)
def test_specialize_is_a_homomorphism(a, b):
    nu = prime_assignment()
    assert (a * b).specialize(nu) == a.specialize(nu) * b.specialize(nu)


@given(coefficients)
def test_is_one_iff_prime_specialization_is_one(a):
    # distinct primes are multiplicatively independent over the rationals
    nu = prime_assignment()
    assert a.is_one() == (a.specialize(nu) == 1)


@given(coefficients, st.integers(-3, 3))
def test_power_matches_repeated_product(a, n):
    expected = QCoefficient.one()
    step = a if n >= 0 else a.inverse()
    for _ in range(abs(n)):
        expected = expected * step
    assert a ** n == expected


# -- polynomial and fraction layers -------------------------------------------

def poly(*cs):
    out = QPolynomial.zero()
    for c in cs:
        out = out + QPolynomial.from_coefficient(c)
    return out


def test_polynomial_cancellation():
    a = qc(1, {(1, 2): 1}.items())
    assert (poly(a) - poly(a)).is_zero()
    assert poly(a, -a).is_zero()


def test_polynomial_product_expands():
    a = qc(1, {(1, 2): 1}.items())
    p = poly(QCoefficient.one(), -a)          # 1 - q12
    q = poly(QCoefficient.one(), a)           # 1 + q12
    assert p * q == poly(QCoefficient.one(), -(a * a))


def test_fraction_clears_monomial_denominators():
    a = qc(2, {(1, 2): 3}.items())
    f = QFraction(QPolynomial.one(), QPolynomial.from_coefficient(a))
    assert f == QFraction.from_coefficient(a.inverse())
    assert f.den == QPolynomial.one()


def test_fraction_field_laws_on_binomials():
    a = QFraction.from_coefficient(qc(1, {(1, 2): 1}.items()))
    one = QFraction.one()
    binom = one - a                            # 1 - q12
    assert not binom.is_zero()
    assert binom * binom.inverse() == one
    assert (binom + a * binom.inverse()).specialize(
        NumericAssignment({(1, 2): Fraction(3)})) == (1 - 3) + Fraction(3, 1 - 3)


def test_fraction_zero_division_guards():
    with pytest.raises(ZeroDivisionError):
        QFraction(QPolynomial.one(), QPolynomial.zero())
    with pytest.raises(ZeroDivisionError):
        QFraction.zero().inverse()


@given(coefficients, coefficients)
def test_fraction_equality_by_cross_multiplication(a, b):
    fa, fb = QFraction.from_coefficient(a), QFraction.from_coefficient(b)
    quotient = fa * fb.inverse()
    assert quotient * fb == fa
    assert (quotient == QFraction.one()) == (a == b)
