import json

import pytest
from roots import enumerate_roots


@pytest.fixture
def in_tmp_dir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_enumerate_roots_writes_roots_artifact(in_tmp_dir):
    enumerate_roots("A", 1, level=3)

    with open(in_tmp_dir / "roots.json") as f:
        document = json.load(f)

    assert document["schema"] == "zapata-v1-roots"
    kinds = [root["kind"] for root in document["roots"]]
    assert kinds.count("real") == 6
    assert kinds.count("imaginary") == 3


def test_enumerate_roots_honours_iota_override(in_tmp_dir):
    enumerate_roots("A", 1, level=2, iota_positive="0,1", iota_nonpositive="1,0")

    with open(in_tmp_dir / "roots.json") as f:
        document = json.load(f)

    assert document["iota"] == {"positive": [0, 1], "nonpositive": [1, 0]}
