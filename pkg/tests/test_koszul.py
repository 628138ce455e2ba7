"""The reduced complex: differential and homotopy coefficients, d^2 = 0,
and the contraction identity dh + hd = id off the admissible multidegrees."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhyperplane.hyperplane import (AlgebraSpec, ScalingAutomorphism, add_index,
                                    apply_sigma, canonical_automorphism, degree,
                                    is_admissible)
from qhyperplane.koszul import (ReducedComplex, chain, chain_add, chain_is_zero,
                                chains_equal, check_d_squared,
                                check_homotopy_identity)
from qhyperplane.qscalar import QCoefficient, QFraction, QPolynomial

Q2 = AlgebraSpec.symbolic(2)
CANONICAL2 = ReducedComplex(Q2, canonical_automorphism(Q2))


def binomial(a: QCoefficient, b: QCoefficient) -> QFraction:
    return QFraction(QPolynomial.from_coefficient(a) - QPolynomial.from_coefficient(b))


# -- differential coefficient ----------------------------------------------------

def test_differential_coefficient_vanishes_on_admissible_top():
    # (1, 1) is admissible for the canonical twist of the quantum plane
    assert CANONICAL2.differential_coefficient((0, 0), (1, 1), 1).is_zero()
    assert CANONICAL2.differential_coefficient((0, 0), (1, 1), 2).is_zero()


def test_differential_coefficient_single_commuting_generator():
    spec = AlgebraSpec.symbolic(1)
    complex_ = ReducedComplex(spec, ScalingAutomorphism.identity(1))
    for alpha in ((0,), (3,)):
        assert complex_.differential_coefficient(alpha, (1,), 1).is_zero()


def test_differential_coefficient_for_one_exterior_slot():
    # 1 - p_1 = 1 - q^{-1} on the quantum plane
    value = CANONICAL2.differential_coefficient((0, 0), (1, 0), 1)
    expected = binomial(QCoefficient.one(), QCoefficient.q_power(1, 2, -1))
    assert value == expected
    assert not value.is_zero()


def test_differential_coefficient_zero_iff_commutation_holds():
    spec = Q2
    sigma = canonical_automorphism(spec)
    complex_ = ReducedComplex(spec, sigma)
    from qhyperplane.hyperplane import sigma_commutes_at
    for alpha, beta in complex_.basis_elements(4):
        gamma = add_index(alpha, beta)
        for i in (1, 2):
            assert (complex_.differential_coefficient(alpha, beta, i).is_zero()
                    == sigma_commutes_at(spec, sigma, gamma, i))


def test_differential_coefficient_index_range():
    with pytest.raises(IndexError):
        CANONICAL2.differential_coefficient((0, 0), (1, 0), 3)


# -- differential ------------------------------------------------------------------

def test_differential_kills_top_class():
    assert CANONICAL2.differential(chain({((0, 0), (1, 1)): 1})) == {}


def test_differential_vanishes_on_admissible_multidegrees():
    for alpha, beta in CANONICAL2.basis_elements(5):
        if is_admissible(Q2, CANONICAL2.sigma, add_index(alpha, beta)):
            assert CANONICAL2.differential(chain({(alpha, beta): 1})) == {}


def test_differential_single_term():
    out = CANONICAL2.differential(chain({((0, 0), (1, 0)): 1}))
    expected_coeff = binomial(QCoefficient.one(), QCoefficient.q_power(1, 2, -1))
    assert set(out) == {((1, 0), (0, 0))}
    assert out[((1, 0), (0, 0))] == expected_coeff


def test_differential_lowers_degree_and_preserves_multidegree():
    for alpha, beta in CANONICAL2.basis_elements(5):
        out = CANONICAL2.differential(chain({(alpha, beta): 1}))
        for a2, b2 in out:
            assert sum(b2) == sum(beta) - 1
            assert add_index(a2, b2) == add_index(alpha, beta)


# -- homotopy coefficient -------------------------------------------------------------

def test_homotopy_coefficient_zero_cases():
    sigma = CANONICAL2.sigma
    # admissible multidegree
    assert CANONICAL2.homotopy_coefficient((1, 1), (0, 0), 1).is_zero()
    # occupied exterior slot
    assert CANONICAL2.homotopy_coefficient((1, 0), (1, 0), 1).is_zero()
    # no symmetric letter to move
    assert CANONICAL2.homotopy_coefficient((0, 1), (0, 0), 1).is_zero()


def test_homotopy_coefficient_inverts_differential_weight():
    w = CANONICAL2.homotopy_coefficient((1, 0), (0, 0), 1)
    back = CANONICAL2.differential_coefficient((0, 0), (1, 0), 1)
    assert w * back == QFraction.one()


def test_homotopy_coefficient_skips_commuting_positions():
    # gamma = (1, 2): generator 2 sigma-commutes, so slot 2 contributes nothing
    # (the literal inverse there would divide by zero)
    assert CANONICAL2.homotopy_coefficient((1, 2), (0, 0), 2).is_zero()
    assert not CANONICAL2.homotopy_coefficient((1, 2), (0, 0), 1).is_zero()


# -- homotopy ---------------------------------------------------------------------------

def test_homotopy_vanishes_on_admissible():
    assert CANONICAL2.homotopy(chain({((1, 1), (0, 0)): 1})) == {}


def test_homotopy_vanishes_without_symmetric_part():
    assert CANONICAL2.homotopy(chain({((0, 0), (1, 0)): 1})) == {}
    assert CANONICAL2.homotopy(chain({((0, 0), (1, 1)): 1})) == {}


def test_contraction_on_one_element():
    e = chain({((1, 0), (0, 0)): 1})
    total = chain_add(CANONICAL2.differential(CANONICAL2.homotopy(e)),
                      CANONICAL2.homotopy(CANONICAL2.differential(e)))
    assert chains_equal(total, e)


# -- exhaustive checks ---------------------------------------------------------------------

def test_d_squared_quantum_plane():
    report = check_d_squared(Q2, canonical_automorphism(Q2), 6)
    assert report.passed and report.checked > 0


def test_d_squared_one_parameter():
    spec = AlgebraSpec.one_parameter(3, 3)
    report = check_d_squared(spec, canonical_automorphism(spec), 5)
    assert report.passed


def test_d_squared_single_generator():
    spec = AlgebraSpec.symbolic(1)
    report = check_d_squared(spec, canonical_automorphism(spec), 6)
    assert report.passed


def test_homotopy_identity_quantum_plane():
    report = check_homotopy_identity(Q2, canonical_automorphism(Q2), 5)
    assert report.passed


def test_homotopy_identity_identity_twist():
    spec = AlgebraSpec.with_distinct_primes(3)
    report = check_homotopy_identity(spec, ScalingAutomorphism.identity(3), 4)
    assert report.passed


def test_homotopy_identity_explicit_twist():
    report = check_homotopy_identity(Q2, ScalingAutomorphism.from_rationals([2, 3]), 4)
    assert report.passed


# -- equivariance -----------------------------------------------------------------------------

def sigma_scale(complex_: ReducedComplex, c):
    out = {}
    for (alpha, beta), coeff in c.items():
        scalar = apply_sigma(complex_.sigma, add_index(alpha, beta))
        out[(alpha, beta)] = coeff * QFraction.from_coefficient(scalar)
    return out


elements2 = st.sampled_from(sorted(CANONICAL2.basis_elements(4)))
small_chains = st.dictionaries(elements2, st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


@settings(max_examples=50, deadline=None)
@given(small_chains)
def test_differential_and_homotopy_are_equivariant(terms):
    c = chain(terms)
    for op in (CANONICAL2.differential, CANONICAL2.homotopy):
        lhs = op(sigma_scale(CANONICAL2, c))
        rhs = sigma_scale(CANONICAL2, op(c))
        assert chains_equal(lhs, rhs)
