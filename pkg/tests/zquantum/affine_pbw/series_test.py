from fractions import Fraction

import numpy as np
import pytest
from zquantum.affine_pbw.checks import random_ratfunc
from zquantum.affine_pbw.qlaurent import Q, RatFunc, paren_q
from zquantum.affine_pbw.series import (
    SeriesVec,
    exp_composition,
    log_composition,
    phi_transform,
    psi_transform,
    scale_variable,
    skew_derive,
)
from zquantum.affine_pbw.utils import RNDSEED


def ratfuncs(values):
    return SeriesVec([RatFunc.coerce(v) for v in values])


def random_sequence(rng, order):
    return SeriesVec([RatFunc(1)] + [random_ratfunc(rng) for _ in range(order)])


class TestSeriesVec:
    def test_empty_series_is_rejected(self):
        with pytest.raises(ValueError):
            SeriesVec([])

    def test_product_is_truncated(self):
        f = ratfuncs([1, 1, 0])

        assert f * f == ratfuncs([1, 2, 1])
        assert (f * f * f) == ratfuncs([1, 3, 3])

    def test_orders_must_match(self):
        with pytest.raises(ValueError):
            ratfuncs([1, 1]) + ratfuncs([1, 1, 1])

    def test_truncate(self):
        assert ratfuncs([1, 2, 3]).truncate(1) == ratfuncs([1, 2])
        with pytest.raises(ValueError):
            ratfuncs([1, 2]).truncate(3)


class TestBellTransforms:
    def test_psi_of_single_generator_is_exponential(self):
        y = psi_transform(ratfuncs([1, 1, 0, 0]))

        assert y.coeffs == [1, 1, Fraction(1, 2), Fraction(1, 6)]

    def test_phi_of_exponential_is_single_generator(self):
        x = phi_transform(ratfuncs([1, 1, Fraction(1, 2), Fraction(1, 6)]))

        assert x.coeffs == [1, 1, 0, 0]

    def test_psi_over_rationals(self):
        y = psi_transform(SeriesVec([Fraction(1), Fraction(2), Fraction(0)]))

        assert y.coeffs == [1, 2, 2]

    @pytest.mark.parametrize("transform", [psi_transform, phi_transform])
    def test_constant_term_must_be_one(self, transform):
        with pytest.raises(ValueError):
            transform(ratfuncs([0, 1]))

    def test_round_trip_on_random_sequences(self):
        rng = np.random.default_rng(RNDSEED)
        for _ in range(10):
            x = random_sequence(rng, 6)

            assert phi_transform(psi_transform(x)) == x
            assert psi_transform(phi_transform(x)) == x

    def test_recursions_agree_with_direct_expansion(self):
        rng = np.random.default_rng(RNDSEED)
        for _ in range(5):
            x = random_sequence(rng, 5)

            assert exp_composition(x) == psi_transform(x)
            assert log_composition(psi_transform(x)) == x


    def test_negative_powers_and_repeated_factors(self):
        one = RatFunc(1)
        square = RatFunc(Q ** 2 + 1) * RatFunc(Q ** 2 + 1)
        x = SeriesVec(
            [
                one,
                RatFunc.q_power(-3) / RatFunc(Q + 2),
                RatFunc(Q ** -1 - Q) / square,
                one / (square * RatFunc(Q + 2)),
                RatFunc.q_power(-7),
                RatFunc(Q ** 3 - 2) / (square * square),
            ]
        )

        assert psi_transform(x) == exp_composition(x)
        assert log_composition(psi_transform(x)) == x
        assert phi_transform(psi_transform(x)) == x
        assert phi_transform(x) == log_composition(x)

    def test_generic_coefficients_match_rational_functions(self):
        x = [Fraction(1), Fraction(2, 3), Fraction(-1, 5), Fraction(7, 2)]

        assert psi_transform(ratfuncs(x)) == ratfuncs(psi_transform(SeriesVec(x)).coeffs)
        assert phi_transform(ratfuncs(x)) == ratfuncs(phi_transform(SeriesVec(x)).coeffs)


class TestChangesOfVariable:
    def test_scale_variable(self):
        f = ratfuncs([1, 1, 1])

        assert scale_variable(f, RatFunc(Q)) == ratfuncs([1, Q, Q ** 2])

    def test_skew_derivation(self):
        f = ratfuncs([1, 1, 1])

        assert skew_derive(f, RatFunc(Q)) == SeriesVec([RatFunc(1), paren_q(2, Q)])

    def test_skew_derivation_at_one_is_derivative(self):
        f = ratfuncs([1, 2, 3, 4])

        assert skew_derive(f, RatFunc(1)) == ratfuncs([2, 6, 12])
