import json

import pytest
from pairing import compute_delta, compute_dual_basis
from zquantum.affine_pbw.serialization import gram_from_dict


@pytest.fixture
def in_tmp_dir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_compute_delta_matches_table_for_a2(in_tmp_dir):
    compute_delta("A", 2, r_max=3)

    with open(in_tmp_dir / "delta.json") as f:
        document = json.load(f)

    assert document["schema"] == "zapata-v1-delta"
    assert [c["r"] for c in document["comparisons"]] == [1, 2, 3]
    assert all(c["matches"] for c in document["comparisons"])


def test_compute_dual_basis_is_orthonormal(in_tmp_dir):
    compute_dual_basis("C", 2, r=2, ell_sample=[1, 3])

    with open(in_tmp_dir / "dual-basis.json") as f:
        document = json.load(f)

    assert document["report"]["orthonormal"]
    assert document["report"]["regular_at"] == {"1": True, "3": True}
    mu = gram_from_dict(document["mu"])
    assert mu.kind == "dual"
    assert mu.size == 2
