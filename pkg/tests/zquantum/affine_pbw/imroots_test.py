from fractions import Fraction

import pytest
from zquantum.affine_pbw.imroots import (
    CLASSICAL,
    HAT,
    ROOT_VECTOR,
    TILDE,
    ImFamily,
    ImPoly,
    PoleError,
    bar,
    check_double_definitions,
    check_hat_dot_relation,
    check_series_relation,
    check_specializations,
    classical_Lambda,
    divided_power_hat,
    family_E,
    family_E_log_oracle,
    family_Edot,
    family_Edot_angle,
    family_Edot_bracket,
    family_Edot_via_E,
    family_Ehat,
    integrality_report,
    regularity_report,
    specialize_family,
    to_coordinates,
)
from zquantum.affine_pbw.qlaurent import Q, RatFunc, q_int, q_minus_inverse


def gen(s, symbol=TILDE):
    return ImPoly.generator(s, symbol)


class TestImPoly:
    def test_arithmetic(self):
        f = gen(1) + gen(2) * 3

        assert f * f == gen(1) ** 2 + gen(1) * gen(2) * 6 + gen(2) ** 2 * 9
        assert f - f == 0
        assert (f - gen(1)) == gen(2) * 3

    def test_constants_compare_with_scalars(self):
        assert ImPoly.constant(2) == 2
        assert ImPoly.constant(RatFunc(Q)) == Q
        assert ImPoly.constant(0).is_zero

    def test_degrees_and_homogeneity(self):
        f = gen(1) ** 2 + gen(2)

        assert f.degrees() == [2]
        assert f.is_homogeneous(2)
        assert not (f + gen(1)).is_homogeneous(2)
        assert f.max_index() == 2

    def test_coefficient_lookup(self):
        f = gen(1) * gen(3) * Fraction(1, 2)

        assert f.coefficient(((3, 1), (1, 1))) == Fraction(1, 2)
        assert f.coefficient(((2, 1),)) == 0

    def test_mixed_symbols_are_rejected(self):
        with pytest.raises(ValueError):
            gen(1) + gen(1, ROOT_VECTOR)

    @pytest.mark.parametrize("s", [0, -1])
    def test_invalid_generator(self, s):
        with pytest.raises(ValueError):
            gen(s)

    def test_invalid_symbol(self):
        with pytest.raises(ValueError):
            ImPoly({}, "F")

    def test_negative_power_is_rejected(self):
        with pytest.raises(ValueError):
            gen(1) ** -1

    def test_bar(self):
        f = gen(1) * RatFunc(Q) + gen(2) * (RatFunc(1) / (Q + 1))

        assert bar(f) == gen(1) * RatFunc.q_power(-1) + gen(2) * (RatFunc(Q) / (Q + 1))

    def test_specialize_q1_renames_generators(self):
        f = gen(2) * RatFunc(q_int(3))

        assert f.specialize_q1() == gen(2, CLASSICAL) * 3

    def test_specialize_q1_raises_on_pole(self):
        with pytest.raises(PoleError):
            (gen(1) * (RatFunc(1) / (Q - 1))).specialize_q1()

    def test_substitute(self):
        f = gen(1) ** 2 + gen(2)
        images = {1: gen(1, HAT) * 2, 2: gen(1, HAT) + 1}

        assert f.substitute(images, HAT) == gen(1, HAT) ** 2 * 4 + gen(1, HAT) + 1

    def test_string_form(self):
        assert str(gen(1) ** 2) == "Et_1^2"
        assert str(ImPoly.constant(0)) == "0"


class TestFamilies:
    def test_first_members_of_E(self):
        e = family_E(1, 2)
        c = RatFunc(q_minus_inverse(1))

        assert e[1] == -gen(1)
        assert e[2] == -gen(2) - gen(1) ** 2 * (c / 2)

    def test_first_members_of_Edot(self):
        dot = family_Edot(1, 2)

        assert dot[0] == 1
        assert dot[1] == gen(1) * RatFunc(Q)
        assert dot[2] == (gen(1) ** 2 * RatFunc(Q) + gen(2)) * (
            RatFunc(Q ** 2) / q_int(2)
        )

    def test_Ehat_rescales_E(self):
        e, hat = family_E(2, 3), family_Ehat(2, 3)

        for r in range(1, 4):
            assert hat[r] == e[r] * (RatFunc(r) / q_int(r, 2))

    def test_members_are_homogeneous(self):
        for family in (family_E(1, 4), family_Edot(2, 4), family_Edot_angle(1, 2, 3)):
            for r, poly in family.items():
                assert poly.is_homogeneous(r * family.k)

    def test_divided_power_hat(self):
        assert divided_power_hat(1, 2, 0) == 1
        assert divided_power_hat(1, 2, 2) == family_Ehat(1, 2)[2] ** 2 * Fraction(1, 2)
        with pytest.raises(ValueError):
            divided_power_hat(1, 2, -1)

    def test_log_oracle_and_recursion_agree(self):
        assert family_E(2, 4) == family_E_log_oracle(2, 4)

    def test_edot_recursions_agree(self):
        assert family_Edot(1, 4) == family_Edot_via_E(1, 4)

    def test_bracket_methods_agree(self):
        assert family_Edot_bracket(1, 2, 3, "recursion") == family_Edot_bracket(
            1, 2, 3, "psi"
        )

    def test_bracket_and_angle_differ_but_agree_at_one(self):
        bracket, angle = family_Edot_bracket(1, 2, 2), family_Edot_angle(1, 2, 2)

        assert bracket[2] != angle[2]
        assert specialize_family(bracket) == specialize_family(angle)

    def test_difference_of_bracket_and_angle_families(self):
        bracket, angle = family_Edot_bracket(1, 2, 2), family_Edot_angle(1, 2, 2)
        c = Q ** 2 - 1
        den = (Q ** 2 + 1) ** 2 * (Q ** 4 + 1)
        expected = ImPoly(
            {
                ((1, 1), (3, 1)): 2 * Q ** 6 * c / ((Q ** 2 + 1) * (Q ** 4 + 1)),
                ((2, 2),): Q ** 4 * c * (2 * Q ** 4 + Q ** 2 + 1) / den,
                ((1, 2), (2, 1)): 4 * Q ** 9 * c / den,
                ((1, 4),): Q ** 8 * c ** 2 / den,
                ((4, 1),): Q ** 3 * c / (Q ** 4 + 1),
            }
        )

        assert bracket[2] - angle[2] == expected

    def test_bracket_in_root_vector_coordinates(self):
        bracket = family_Edot_bracket(1, 1, 2, symbol=ROOT_VECTOR)

        assert bracket[0].symbol == ROOT_VECTOR
        assert to_coordinates(bracket[2], TILDE, 1) == family_Edot_bracket(1, 1, 2)[2]

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            family_E(0, 3)
        with pytest.raises(ValueError):
            family_Edot_angle(1, 0, 3)
        with pytest.raises(ValueError):
            family_Edot_bracket(1, 1, 3, method="other")

    def test_classical_lambda_for_k_one(self):
        lam = classical_Lambda(1, 2)
        e1, e2 = gen(1, CLASSICAL), gen(2, CLASSICAL)

        assert lam[1] == e1
        assert lam[2] == e1 ** 2 * Fraction(1, 2) + e2 * Fraction(1, 2)

    def test_family_equality_ignores_name_of_construction(self):
        assert ImFamily("E", 1, 1, {1: gen(1)}) == ImFamily("E", 1, 1, {1: gen(1)})
        assert ImFamily("E", 1, 1, {1: gen(1)}) != ImFamily("E", 1, 1, {1: gen(2)})


class TestIdentities:
    @pytest.mark.parametrize("d,k", [(1, 1), (1, 2), (2, 1), (3, 2)])
    def test_double_definitions(self, d, k):
        for report in check_double_definitions(d, k, 4):
            assert report.holds, report

    @pytest.mark.parametrize("d,k", [(1, 1), (2, 2), (3, 1)])
    def test_specializations(self, d, k):
        for report in check_specializations(d, k, 4):
            assert report.holds, report

    @pytest.mark.parametrize("d,k", [(1, 1), (1, 3), (2, 2)])
    def test_series_relation(self, d, k):
        assert check_series_relation(d, k, 4).holds

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_hat_dot_relation(self, d):
        assert check_hat_dot_relation(d, 4).holds


class TestCoefficientReports:
    def test_edot_has_a_pole_at_fifth_roots_of_unity(self):
        """The E~_5 coefficient of Edot_5 is q^5 / [5]_q."""
        report = regularity_report(family_Edot(1, 5), [5])

        assert not report.holds
        assert {r for r, _, _ in report.failures} == {5}
        assert (((5, 1),), "pole at order 5") in {(m, d) for _, m, d in report.failures}

    @pytest.mark.parametrize("order", [1, 7, 11])
    def test_edot_is_regular_at_other_orders(self, order):
        assert regularity_report(family_Edot(1, 5), [order]).holds

    @pytest.mark.parametrize("d,order", [(1, 3), (1, 5), (2, 5), (3, 5), (1, 7)])
    def test_first_pole_of_edot_is_at_the_order(self, d, order):
        """Edot_r is regular at odd ell coprime to d_i for r < ell."""
        report = regularity_report(family_Edot(d, order), [order])

        assert report.first_index == order

    @pytest.mark.parametrize("d,order", [(1, 5), (2, 3), (3, 7)])
    def test_root_vectors_are_regular(self, d, order):
        report = regularity_report(family_E(d, order), [order])

        assert report.holds
        assert report.first_index is None

    def test_normalized_root_vectors_have_a_pole_at_the_order(self):
        report = regularity_report(family_Ehat(1, 5), [5])

        assert report.first_index == 5
        assert (((5, 1),), "pole at order 5") in {(m, d) for _, m, d in report.failures}

    def test_integrality_is_recorded(self):
        report = integrality_report(family_E(1, 3))

        assert not report.holds
        assert 1 not in {r for r, _, _ in report.failures}
        assert 2 in {r for r, _, _ in report.failures}
