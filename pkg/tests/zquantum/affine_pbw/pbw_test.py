from fractions import Fraction

import pytest
from zquantum.affine_pbw.pbw import (
    INFINITY,
    ExpEntry,
    ExpVec,
    ToralElement,
    basis_toral,
    basis_toral_monomial,
    block_transition_roundtrip,
    classical_transition,
    is_ordered,
    toral_element,
    toral_index_set,
    toral_regularity_report,
    toral_symmetrizer,
    toral_value_expected,
    weight,
)
from zquantum.affine_pbw.qlaurent import Q, RatFunc, q_int, q_minus_inverse
from zquantum.affine_pbw.rootsys import cartan_affine, enumerate_ordered_roots, imaginary_root


@pytest.fixture
def a1_roots():
    return enumerate_ordered_roots(cartan_affine("A", 1), level=3)


class TestExpVec:
    def test_zero_exponent_is_rejected(self, a1_roots):
        with pytest.raises(ValueError):
            ExpEntry(a1_roots.beta(1), 0, "q-divided")

    def test_normalization_must_fit_the_root(self, a1_roots):
        with pytest.raises(ValueError):
            ExpEntry(imaginary_root(a1_roots.data, 1, 1), 1, "q-divided")
        with pytest.raises(ValueError):
            ExpEntry(a1_roots.beta(1), 1, "plain-divided")

    def test_repeated_root_is_rejected(self, a1_roots):
        entry = ExpEntry(a1_roots.beta(1), 1, "bare")

        with pytest.raises(ValueError):
            ExpVec([entry, entry])

    def test_factors_follow_the_convex_order(self, a1_roots):
        last, first = a1_roots.beta(0), a1_roots.beta(1)
        v = ExpVec({last: 1, first: 2}, a1_roots)

        assert [entry.root for entry in v] == [first, last]
        assert is_ordered(v, a1_roots)
        assert not is_ordered(ExpVec({last: 1, first: 2}), a1_roots)

    def test_zero_exponents_are_dropped(self, a1_roots):
        v = ExpVec({a1_roots.beta(1): 0, a1_roots.beta(2): 1}, a1_roots)

        assert len(v) == 1
        assert v[a1_roots.beta(1)] == 0
        assert v[a1_roots.beta(2)] == 1

    def test_addition(self, a1_roots):
        beta_1, beta_2 = a1_roots.beta(1), a1_roots.beta(2)

        assert ExpVec({beta_1: 1}, a1_roots) + ExpVec({beta_1: 2, beta_2: 1}) == ExpVec(
            {beta_1: 3, beta_2: 1}, a1_roots
        )

    def test_divided_and_dual_normalizations(self, a1_roots):
        imaginary = imaginary_root(a1_roots.data, 1, 1)
        v = ExpVec({a1_roots.beta(1): 1, imaginary: 1}, a1_roots)

        assert [entry.normalization for entry in v.divided()] == ["q-divided", "plain-divided"]
        assert [entry.normalization for entry in v.dual()] == ["rescaled", "bare"]

    def test_weight(self, a1_roots):
        imaginary = imaginary_root(a1_roots.data, 1, 1)
        v = ExpVec({a1_roots.beta(1): 2, a1_roots.beta(2): 1, imaginary: 1}, a1_roots)

        assert weight(v) == (5, 2)
        assert weight(ExpVec({}, a1_roots)) == (0, 0)
        with pytest.raises(ValueError):
            weight(ExpVec({}))

    def test_ordered_sorts_a_storage_only_vector(self, a1_roots):
        last, first = a1_roots.beta(0), a1_roots.beta(1)
        stored = ExpVec({last: 1, first: 2})

        assert [entry.root for entry in stored] == [last, first]
        assert [entry.root for entry in stored.ordered(a1_roots)] == [first, last]
        assert is_ordered(stored.ordered(a1_roots), a1_roots)

    @pytest.mark.parametrize("letter,rank", [("A", 1), ("A", 2), ("C", 2)])
    def test_weight_is_additive(self, letter, rank):
        order = enumerate_ordered_roots(cartan_affine(letter, rank), level=2)
        roots = list(order)

        for start in range(len(roots)):
            v = ExpVec({roots[start]: 1, roots[start - 3]: 2}, order)
            w = ExpVec({roots[start]: 2, roots[(start + 5) % len(roots)]: 1}, order)
            total = weight(v + w)
            assert total == tuple(a + b for a, b in zip(weight(v), weight(w)))


class TestToralElements:
    def test_element_with_one_factor(self):
        element = toral_element(1, 0, 1)
        denominator = RatFunc(q_minus_inverse(1))

        assert element.coefficient(1) == RatFunc(1) / denominator
        assert element.coefficient(-1) == RatFunc(-1) / denominator
        assert element.degrees() == [-1, 1]

    def test_depth_zero_is_one(self):
        assert toral_element(2, 3, 0, d=2) == ToralElement.one(2, 2)

    @pytest.mark.parametrize("m,c,t,d", [(3, 0, 1, 1), (4, 0, 2, 1), (2, 1, 2, 2), (1, 0, 3, 1)])
    def test_values_are_gaussian_binomials(self, m, c, t, d):
        assert toral_element(1, c, t, d).evaluate(m) == toral_value_expected(m, c, t, d)

    def test_basis_element_is_shifted(self):
        assert basis_toral(1, 2) == toral_element(1, 0, 2).shift(-1)
        assert basis_toral(1, 3).evaluate(3) == RatFunc.q_power(-3)

    def test_value_at_q_power(self):
        assert toral_element(1, 0, 1).evaluate(2) == q_int(2)

    def test_products_need_the_same_index(self):
        with pytest.raises(ValueError):
            toral_element(1, 0, 1) * toral_element(2, 0, 1)

    def test_negative_depth_is_rejected(self):
        with pytest.raises(ValueError):
            toral_element(1, 0, -1)

    def test_scalar_multiple(self):
        element = toral_element(1, 0, 1) * RatFunc(Q)

        assert element.evaluate(1) == Q

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("c", [-2, 0, 1, 4])
    def test_degrees_are_all_of_the_same_parity_up_to_t(self, c, d):
        for t in range(9):
            assert toral_element(1, c, t, d).degrees() == list(range(-t, t + 1, 2))


class TestToralIndexSets:
    def test_index_sets(self):
        data = cartan_affine("A", 1)

        assert toral_index_set(data, "I_0") == [1]
        assert toral_index_set(data, "I") == [0, 1]
        assert toral_index_set(data, "I_inf") == [0, 1, INFINITY]
        with pytest.raises(ValueError):
            toral_index_set(data, "J")

    def test_symmetrizers(self):
        data = cartan_affine("C", 2)

        assert toral_symmetrizer(data, INFINITY) == 1
        assert toral_symmetrizer(data, 1) == 1
        assert toral_symmetrizer(data, 2) == 2

    def test_monomial(self):
        data = cartan_affine("C", 2)
        factors = basis_toral_monomial(data, {0: 1, INFINITY: 2}, "I_inf")

        assert len(factors) == 4
        assert factors[0] == basis_toral(0, 1, 2)
        assert factors[1] == ToralElement.one(1, 1)
        assert factors[-1] == basis_toral(INFINITY, 2, 1)

    def test_monomial_outside_the_index_set(self):
        with pytest.raises(ValueError):
            basis_toral_monomial(cartan_affine("A", 1), {INFINITY: 1}, "I")


class TestToralRegularity:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_values_are_integral(self, d):
        report = toral_regularity_report(1, 3, d, [1, 3, 5])

        assert report.values_checked == 4 * 9

    def test_coefficient_poles_are_recorded(self):
        report = toral_regularity_report(1, 2, 1, [1])

        assert (1, 1, 1) in report.coefficient_poles
        assert all(t >= 1 for t, _, _ in report.coefficient_poles)


class TestBlockTransitions:
    def test_classical_transition_low_degrees(self):
        blocks = classical_transition(1, 3)

        assert blocks[0] == [[1]]
        assert blocks[1] == [[1]]
        assert len(blocks[3]) == 3
        assert all(isinstance(c, Fraction) for row in blocks[2] for c in row)

    @pytest.mark.parametrize("d,k,T", [(1, 1, 3), (1, 2, 2), (2, 1, 2)])
    def test_roundtrip(self, d, k, T):
        report = block_transition_roundtrip(d, k, T)

        assert report.holds
        assert [block.r for block in report.blocks] == list(range(T + 1))

    def test_degree_one_block(self):
        block = block_transition_roundtrip(1, 1, 1).blocks[1]

        assert block.basis == [{1: 1}]
        assert block.forward == [[-RatFunc(Q)]]
        assert block.backward == [[-RatFunc.q_power(-1)]]
