import json
import os

import pytest
from zquantum.affine_pbw.cli import build_parser, main, parse_exponent_tokens
from zquantum.affine_pbw.config import ENV_PREFIX
from zquantum.affine_pbw.qlaurent import Q
from zquantum.affine_pbw.rootsys import cartan_affine, enumerate_ordered_roots, imaginary_root
from zquantum.affine_pbw.serialization import ratfunc_from_dict
from zquantum.affine_pbw.utils import SCHEMA_VERSION


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in list(os.environ):
        if name.startswith(ENV_PREFIX):
            monkeypatch.delenv(name)


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestCommands:
    def test_delta_matches_for_a2(self, capsys):
        status, out, _ = run(capsys, "delta", "--type", "A", "--rank", "2", "--r", "3")

        assert status == 0
        assert out.splitlines()[0] == "Delta_3 (A2)"
        assert "  match: true" in out.splitlines()

    def test_roots_of_a1(self, capsys):
        status, out, _ = run(capsys, "roots", "--type", "A", "--rank", "1", "--level", "3")

        assert status == 0
        assert out.splitlines()[0] == "A1, delta-level 3: 6 real, 3 imaginary"

    def test_bell_psi(self, capsys):
        status, out, _ = run(capsys, "bell", "--psi", "0,1,0,0")

        assert status == 0
        assert out.strip() == "1, 1, (1/2), (1/6)"

    def test_bell_phi(self, capsys):
        status, out, _ = run(capsys, "bell", "--phi", "1,1,(1/2),(1/6)")

        assert status == 0
        assert out.strip() == "0, 1, 0, 0"

    def test_json_output_is_tagged_with_a_schema(self, capsys):
        status, out, _ = run(
            capsys, "roots", "--type", "A", "--rank", "1", "--level", "2", "--format", "json"
        )
        document = json.loads(out)

        assert status == 0
        assert document["schema"] == SCHEMA_VERSION + "-roots"
        assert len(document["roots"]) == 6

    def test_pair(self, capsys):
        status, out, _ = run(
            capsys,
            "pair",
            "--level",
            "3",
            "--left",
            "b1^2,d1.1",
            "--right",
            "b1^2 d1.1",
            "--format",
            "json",
        )

        assert status == 0
        assert ratfunc_from_dict(json.loads(out)["value"]) == Q

    def test_toral_at_infinity(self, capsys):
        status, out, _ = run(
            capsys, "toral", "--index", "inf", "--index-set", "I_inf", "--t", "2"
        )

        assert status == 0
        assert "K_inf: 21 values integral" in out

    def test_imroots_reports_poles_without_failing(self, capsys):
        status, out, _ = run(capsys, "imroots", "--family", "Edot", "-T", "5", "--ell", "5")

        assert status == 0
        assert "regular at [5]: false" in out

    def test_gram(self, capsys):
        status, out, _ = run(capsys, "gram", "--type", "A", "--rank", "2", "--r", "1")

        assert status == 0
        assert out.splitlines()[0] == "M for A2, r=1:"

    def test_dual(self, capsys):
        status, out, _ = run(capsys, "dual", "--type", "C", "--rank", "2", "--r", "2")

        assert status == 0
        assert "orthonormal: true" in out

    def test_check_all_subset(self, capsys):
        status, out, _ = run(capsys, "check-all", "--only", "iota")

        assert status == 0
        assert out.splitlines()[0] == "[PASS] iota validation"


class TestExitStatus:
    @pytest.mark.parametrize(
        "argv",
        [[], ["roots", "--bogus"], ["bell"], ["gram", "--r", "x"]],
    )
    def test_usage_errors(self, argv):
        assert main(argv) == 2

    def test_invalid_type_is_a_configuration_error(self, capsys):
        status, _, err = run(capsys, "roots", "--type", "X")

        assert status == 2
        assert err.startswith("[error]")

    @pytest.mark.parametrize("word", ["0,x;1,0", "0,0;1,0", ";1,0", "0,5;1,0"])
    def test_malformed_iota_is_a_configuration_error(self, capsys, word):
        status, _, err = run(capsys, "roots", "--level", "3", "--iota", word)

        assert status == 2
        assert err.startswith("[error]")

    def test_environment_is_read(self, capsys, monkeypatch):
        monkeypatch.setenv(ENV_PREFIX + "TRUNCATION", "0")

        status, _, _ = run(capsys, "delta")

        assert status == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["bell", "--psi", "q^2-1/q-1"],
            ["bell", "--psi", "1,1"],
            ["toral", "--index", "7"],
            ["pair", "--left", "x1", "--right", "b1"],
        ],
    )
    def test_computation_errors(self, capsys, argv):
        status, _, err = run(capsys, *argv)

        assert status == 1
        assert err.startswith(f"[{argv[0]}] FAIL")


class TestParser:
    def test_global_options_follow_the_subcommand(self):
        args = build_parser().parse_args(["delta", "--type", "E6", "-T", "3"])

        assert (args.command, args.type_label, args.truncation) == ("delta", "E6", 3)

    def test_exponent_tokens(self):
        order = enumerate_ordered_roots(cartan_affine("A", 1), level=3)

        assert parse_exponent_tokens("b1^2, d2.1, b1", order) == {
            order.beta(1): 3,
            imaginary_root(order.data, 2, 1): 1,
        }
