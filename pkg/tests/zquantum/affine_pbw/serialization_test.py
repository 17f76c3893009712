"""Test cases for serialization module."""
import io
import json

import pytest
from zquantum.affine_pbw.imroots import family_Edot
from zquantum.affine_pbw.pairing import compare_delta, m_matrix
from zquantum.affine_pbw.pbw import ExpVec, toral_element
from zquantum.affine_pbw.qlaurent import Q, RatFunc
from zquantum.affine_pbw.rootsys import cartan_affine, enumerate_ordered_roots, imaginary_root
from zquantum.affine_pbw.serialization import (
    load_expvec,
    load_family,
    load_gram_matrix,
    load_ratfunc,
    root_from_dict,
    save_artifact,
    save_expvec,
    save_family,
    save_gram_matrix,
    save_ratfunc,
    to_dict,
)
from zquantum.affine_pbw.utils import SCHEMA_VERSION


@pytest.fixture
def a1_roots():
    return enumerate_ordered_roots(cartan_affine("A", 1), level=2)


def saved(save, obj, *args):
    buffer = io.StringIO()
    save(obj, buffer, *args)
    buffer.seek(0)
    return buffer


class TestToDict:
    def test_laurent_and_ratfunc(self):
        assert to_dict(RatFunc(1) / (Q + 1)) == {
            "num": {"terms": [[0, "1", "1"]]},
            "den": {"terms": [[0, "1", "1"], [1, "1", "1"]]},
        }
        assert to_dict(Q ** -2 * 3 - 1) == {"terms": [[-2, "3", "1"], [0, "-1", "1"]]}

    def test_fractions_are_kept_exact(self):
        assert to_dict(RatFunc(1) / 6) == {
            "num": {"terms": [[0, "1", "6"]]},
            "den": {"terms": [[0, "1", "1"]]},
        }

    def test_cartan_data(self):
        assert to_dict(cartan_affine("A", 1)) == {
            "type": "A",
            "rank": 1,
            "matrix": [[2, -2], [-2, 2]],
            "d": [1, 1],
            "o": [1],
            "marks": [1, 1],
        }

    def test_roots(self, a1_roots):
        assert to_dict(a1_roots.beta(1)) == {"coords": [1, 0], "kind": "real"}
        assert to_dict(imaginary_root(a1_roots.data, 2, 1)) == {
            "coords": [2, 2],
            "kind": "imaginary",
            "mult_index": 1,
        }

    def test_ordered_roots_carry_labels(self, a1_roots):
        dictionary = to_dict(a1_roots)

        assert dictionary["level"] == 2
        assert [root["label"] for root in dictionary["roots"]] == a1_roots.labels

    def test_exponent_vector(self, a1_roots):
        vector = ExpVec({a1_roots.beta(1): 2}, a1_roots)

        assert to_dict(vector) == {
            "entries": [
                {
                    "root": {"coords": [1, 0], "kind": "real"},
                    "exp": 2,
                    "normalization": "q-divided",
                }
            ]
        }

    def test_toral_element(self):
        dictionary = to_dict(toral_element(1, 0, 1))

        assert dictionary["index"] == 1
        assert [degree for degree, _ in dictionary["terms"]] == [-1, 1]

    def test_delta_comparison(self):
        dictionary = to_dict(compare_delta(cartan_affine("A", 2), 3))

        assert dictionary["matches"]
        assert dictionary["type"] == "A2"
        assert "corrected_sign" not in dictionary

    def test_unsupported_type(self):
        with pytest.raises(NotImplementedError):
            to_dict(object())


class TestSaveAndLoad:
    def test_schema_is_written(self):
        buffer = saved(save_ratfunc, RatFunc(Q))

        assert json.load(buffer)["schema"] == SCHEMA_VERSION + "-ratfunc"

    def test_ratfunc(self):
        value = (RatFunc(Q ** 3) - 2) / (Q ** 2 + 1)

        assert load_ratfunc(saved(save_ratfunc, value)) == value

    def test_family(self):
        family = family_Edot(2, 3)

        assert load_family(saved(save_family, family)) == family

    def test_gram_matrix_from_a_file(self, tmp_path):
        matrix = m_matrix(cartan_affine("C", 2), 2)
        path = str(tmp_path / "gram.json")

        save_gram_matrix(matrix, path)

        assert load_gram_matrix(path) == matrix

    def test_exponent_vector(self, a1_roots):
        vector = ExpVec(
            {a1_roots.beta(1): 1, imaginary_root(a1_roots.data, 1, 1): 2}, a1_roots
        ).dual()

        assert load_expvec(saved(save_expvec, vector), a1_roots.data) == vector

    def test_schema_mismatch(self):
        with pytest.raises(ValueError):
            load_family(saved(save_ratfunc, RatFunc(1)))

    def test_save_artifact(self, a1_roots):
        buffer = saved(save_artifact, a1_roots, "roots")

        assert json.load(buffer)["schema"] == SCHEMA_VERSION + "-roots"


class TestRootFromDict:
    def test_imaginary_root_must_be_a_multiple_of_delta(self):
        with pytest.raises(ValueError):
            root_from_dict(
                {"coords": [1, 2], "kind": "imaginary", "mult_index": 1},
                cartan_affine("A", 1),
            )

    def test_invalid_kind(self):
        with pytest.raises(ValueError):
            root_from_dict({"coords": [1, 0], "kind": "other"}, cartan_affine("A", 1))
