# tests/integration/test_cli.py
"""
Integration tests for the command-line front end.
"""
import io
import json
import os

import pytest

from cli.main import build_parser, run
from stability.report import ComparisonReport, ComparisonRow, Theorem

SMALL = ["--max-arity", "3", "--max-weight", "3", "--max-degree", "3"]


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestHomologyCommands:
    def test_bar_json(self):
        code, out, _ = invoke("bar", "--operad", "com", *SMALL, "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "bar"
        blocks = {(b["n"], b["w"], b["d"]): b["dim"] for b in data["blocks"]}
        assert blocks[(1, 0, 0)] == 1
        assert blocks[(3, 2, 2)] == 2

    def test_output_is_deterministic(self):
        first = invoke("wbar", "--operad", "lie", *SMALL, "--format", "csv")
        second = invoke("wbar", "--operad", "lie", *SMALL, "--format", "csv")
        assert first[0] == 0
        assert first[1] == second[1]

    def test_out_file(self, temp_dir):
        path = os.path.join(temp_dir, "hc.json")
        code, out, _ = invoke("hc", "--operad", "com", *SMALL, "--format", "json", "--out", path)
        assert code == 0
        assert out == ""
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        assert data["kind"] == "hc"

    def test_ce_text(self):
        code, out, _ = invoke(
            "ce", "--operad", "com", "--max-arity", "3", "--max-weight", "1", "--max-degree", "2",
            "--dimv", "2", "--p", "1", "--q", "1", "--weight", "0",
        )
        assert code == 0
        assert out.splitlines()[0].startswith("ce com der+ dimV=2 p=1 q=1")


class TestCompareCommand:
    def test_lqt_writes_report(self, temp_dir):
        code, out, _ = invoke(
            "compare", "--theorem", "lqt", "--dimv", "3", "--max-degree", "4",
            "--format", "json", "--reports-dir", temp_dir,
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"
        written = [name for name in os.listdir(temp_dir) if name.endswith(".json")]
        assert written and all(name.startswith("lqt_") for name in written)

    def test_mismatch_exits_two(self, temp_dir, mocker):
        failing = ComparisonReport(
            theorem=Theorem.MAIN1, operad="com",
            rows=[ComparisonRow(dim_v=4, w=1, d=1, left=1, right=0)],
        ).finalize()
        mocker.patch("cli.main.execute", return_value=failing)
        code, out, err = invoke("compare", "--theorem", "main1", "--reports-dir", temp_dir)
        assert code == 2
        # the table is still written before the failure is reported
        assert out.startswith("main1 com: FAIL")
        assert json.loads(err)["code"] == "STAB_4001"
        assert os.path.exists(os.path.join(temp_dir, "main1_com.json"))


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["bar", "--no-such-flag"],
        ["bar", "--operad", "foo"],
        ["bar", "--max-arity", "0"],
        ["compare", "--theorem", "nonsense"],
        ["mult", "--operad", "lie", "--beta", "1,x"],
        ["ce", "--weight", "-1"],
        ["compare", "--theorem", "newfuchs", "--weight", "0"],
        [],
    ])
    def test_configuration_errors(self, argv):
        code, out, err = invoke(*argv)
        assert code == 1
        assert out == ""
        assert "error" in json.loads(err)

    def test_alg1_needs_spec_file(self):
        code, _, _ = invoke("bar", "--operad", "alg1", *SMALL)
        assert code == 1

    def test_internal_error(self, mocker):
        mocker.patch("cli.main.execute", side_effect=RuntimeError("boom"))
        code, _, err = invoke("bar", *SMALL)
        assert code == 2
        assert json.loads(err)["code"] == "SRV_9001"


class TestParser:
    def test_partitions(self):
        args = build_parser().parse_args(["mult", "--alpha", "", "--beta", "2,1"])
        assert args.alpha == []
        assert args.beta == [2, 1]

    def test_compare_isotypic_flag(self):
        args = build_parser().parse_args(["compare", "--theorem", "main2", "--isotypic"])
        assert args.isotypic is True

    def test_coefficient_pairs(self):
        args = build_parser().parse_args(["compare", "--theorem", "main1", "--coeff", "1,0", "--coeff", "2,1"])
        assert args.coeff == [(1, 0), (2, 1)]
