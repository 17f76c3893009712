import warnings

import pytest
from zquantum.affine_pbw.pairing import (
    DeltaTableWarning,
    admissible_orders,
    check_delta_nonvanishing,
    compare_delta,
    delta_closed,
    delta_det,
    first_admissible_orders,
    gram_imaginary,
    gram_real,
    has_erratum,
    is_admissible,
    m_matrix,
    m_matrix_and_dual,
    pair_monomials,
    pair_toral,
)
from zquantum.affine_pbw.pbw import ExpVec
from zquantum.affine_pbw.qlaurent import Q, RatFunc, q_int, q_minus_inverse
from zquantum.affine_pbw.rootsys import (
    cartan_affine,
    enumerate_ordered_roots,
    imaginary_root,
    real_root,
    simple_root,
)

TABLE_TYPES = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 3),
    ("C", 2),
    ("D", 4),
    ("E", 6),
    ("E", 7),
    ("E", 8),
    ("F", 4),
]


class TestDelta:
    def test_a2_closed_form(self):
        data = cartan_affine("A", 2)

        assert delta_closed(data, 3) == q_int(3, 3)
        assert delta_det(data, 3) == q_int(3, 3)

    @pytest.mark.parametrize("letter,rank", TABLE_TYPES)
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_table_matches_determinant_up_to_sign(self, letter, rank, r):
        with warnings.catch_warnings():
            warnings.simplefilter("error", DeltaTableWarning)
            comparison = compare_delta(cartan_affine(letter, rank), r)

        assert comparison.matches
        assert comparison.sign in (1, -1)

    def test_g2_table_line_is_reported_and_corrected(self):
        data = cartan_affine("G", 2)

        with pytest.warns(DeltaTableWarning):
            comparison = compare_delta(data, 1)

        assert has_erratum(data)
        assert not comparison.matches
        assert comparison.matches_after_correction
        assert delta_closed(data, 2, corrected=True) == q_int(2, 8) - 1

    def test_invalid_level(self):
        with pytest.raises(ValueError):
            delta_det(cartan_affine("A", 1), 0)


class TestGramMatrices:
    def test_m_matrix_of_a2(self):
        m = m_matrix(cartan_affine("A", 2), 1)

        assert m.rows() == [
            [RatFunc(q_int(2)), RatFunc(1)],
            [RatFunc(1), RatFunc(q_int(2))],
        ]
        assert m.entry(1, 2) == 1

    def test_m_matrix_is_unsigned_at_even_levels(self):
        m = m_matrix(cartan_affine("A", 2), 2)

        assert m.entry(1, 2) == -1

    def test_imaginary_block(self):
        data = cartan_affine("A", 1)

        assert gram_imaginary(data, 1, 1).entry(1, 1) == RatFunc(q_int(2)) / (
            Q ** -1 - Q
        )
        assert all(entry == 0 for row in gram_imaginary(data, 1, 2).rows() for entry in row)

    @pytest.mark.parametrize(
        "letter,rank", [("A", 1), ("A", 2), ("B", 3), ("C", 2), ("D", 4), ("G", 2)]
    )
    def test_imaginary_block_is_a_rescaled_m_matrix(self, letter, rank):
        data = cartan_affine(letter, rank)

        for r in range(1, 7):
            gram, m = gram_imaginary(data, r, r), m_matrix(data, r)
            for i in range(1, rank + 1):
                for j in range(1, rank + 1):
                    scale = RatFunc(q_int(r, data.d[i])) / (
                        -q_minus_inverse(data.d[j]) * r
                    )
                    assert gram.entry(i, j) == m.entry(i, j) * scale

    def test_real_block(self):
        data = cartan_affine("C", 2)
        short, long = real_root(data, (0, 1, 0)), real_root(data, (0, 0, 1))

        assert gram_real(short, short) == RatFunc(1) / (Q ** -1 - Q)
        assert gram_real(long, long) == RatFunc(1) / (Q ** -2 - Q ** 2)
        assert gram_real(short, long) == 0
        with pytest.raises(ValueError):
            gram_real(short, imaginary_root(data, 1, 1))

    @pytest.mark.parametrize("letter,rank", [("A", 2), ("C", 2), ("G", 2), ("D", 4)])
    @pytest.mark.parametrize("r", [1, 2])
    def test_dual_basis(self, letter, rank, r):
        data = cartan_affine(letter, rank)

        m, mu, report = m_matrix_and_dual(data, r, first_admissible_orders(data, 3))

        assert report.holds
        assert report.orthonormal
        assert report.det_sign in (1, -1)
        assert mu.kind == "dual"
        assert mu.size == m.size == rank


class TestPairing:
    @pytest.fixture
    def a1_roots(self):
        return enumerate_ordered_roots(cartan_affine("A", 1), level=3)

    def test_divided_against_dual_is_a_power_of_q(self, a1_roots):
        beta_1, beta_2 = a1_roots.beta(1), a1_roots.beta(2)
        imaginary = imaginary_root(a1_roots.data, 1, 1)
        n = ExpVec({beta_1: 2, beta_2: 3, imaginary: 2}, a1_roots)

        assert pair_monomials(n.divided(), n.dual()) == Q ** 4

    def test_mismatched_monomials_pair_to_zero(self, a1_roots):
        beta_1, beta_2 = a1_roots.beta(1), a1_roots.beta(2)
        n = ExpVec({beta_1: 2}, a1_roots)
        m = ExpVec({beta_1: 1}, a1_roots)
        k = ExpVec({beta_2: 2}, a1_roots)

        assert pair_monomials(n.divided(), m.dual()) == 0
        assert pair_monomials(n.divided(), k.dual()) == 0

    def test_pairing_is_symmetric(self, a1_roots):
        n = ExpVec({a1_roots.beta(0): 2, a1_roots.beta(1): 1}, a1_roots)

        assert pair_monomials(n.divided(), n.dual()) == pair_monomials(n.dual(), n.divided())

    def test_bare_powers(self, a1_roots):
        n = ExpVec({a1_roots.beta(1): 2}, a1_roots).with_normalization("bare", "bare")

        assert pair_monomials(n, n) == RatFunc(Q * q_int(2)) / (Q ** -1 - Q) ** 2

    def test_imaginary_diagonal(self, a1_roots):
        imaginary = imaginary_root(a1_roots.data, 2, 1)
        n = ExpVec({imaginary: 2}, a1_roots).with_normalization("bare", "bare")

        assert pair_monomials(n, n, imdiag=lambda root: RatFunc(Q)) == Q ** 2 * 2

    def test_toral_pairing(self):
        data = cartan_affine("A", 1)

        assert pair_toral(data, simple_root(data, "inf"), simple_root(data, 0)) == (
            RatFunc.q_power(-1)
        )
        assert pair_toral(data, simple_root(data, 1), simple_root(data, 1)) == (
            RatFunc.q_power(-2)
        )


class TestRootsOfUnity:
    @pytest.mark.parametrize(
        "label,ell,admissible",
        [
            ("A1", 1, True),
            ("A1", 3, True),
            ("A2", 3, False),
            ("A2", 5, True),
            ("A3", 3, True),
            ("A3", 4, False),
            ("G2", 3, False),
            ("E6", 9, False),
            ("E7", 3, True),
            ("B3", 3, True),
        ],
    )
    def test_is_admissible(self, label, ell, admissible):
        assert is_admissible(cartan_affine(label), ell) == admissible

    def test_admissible_orders(self):
        assert admissible_orders(cartan_affine("G", 2), 10) == [1, 5, 7]
        assert first_admissible_orders(cartan_affine("A", 2)) == [1, 5, 7]
        with pytest.raises(ValueError):
            is_admissible(cartan_affine("A", 1), 0)

    def test_delta_nonzero_at_admissible_order(self):
        report = check_delta_nonvanishing(cartan_affine("A", 2), 5, 10)

        assert report.admissible
        assert report.all_nonzero

    def test_a2_negative_control(self):
        report = check_delta_nonvanishing(cartan_affine("A", 2), 3, 6)

        assert not report.admissible
        assert not report.all_nonzero
        assert report.counterexample_r == 1

    def test_g2_negative_control_only_holds_for_the_table_line(self):
        data = cartan_affine("G", 2)

        assert check_delta_nonvanishing(data, 3, 6).all_nonzero
        assert check_delta_nonvanishing(data, 3, 6, source="corrected").all_nonzero
        assert not check_delta_nonvanishing(data, 3, 6, source="table").all_nonzero

    def test_invalid_source(self):
        with pytest.raises(ValueError):
            check_delta_nonvanishing(cartan_affine("A", 1), 1, 2, source="other")
