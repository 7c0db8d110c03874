"""Tests for the grasschar command line"""

import json

import pytest
from typer.testing import CliRunner

from grasschar import __version__
from grasschar.main import app, parse_t_range, run
from grasschar.core.config import Settings

runner = CliRunner()


def json_reports(stdout: str):
    return [json.loads(line) for line in stdout.splitlines() if line.startswith("{") and '"claim_id"' in line]


class TestCompute:
    def test_g(self):
        result = runner.invoke(app, ["compute", "g", "--r", "7"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "w2^2*w3"

    def test_g_json(self):
        result = runner.invoke(app, ["compute", "g", "--r", "6", "--format", "json"])
        assert json.loads(result.stdout) == {"object": "g", "r": 6, "poly": "w2^3 + w3^2"}

    def test_wbar(self):
        result = runner.invoke(app, ["compute", "wbar", "--r", "2"])
        assert result.stdout.strip() == "w1^2 + w2"

    def test_gb(self):
        result = runner.invoke(app, ["compute", "gb", "--ring", "imageJ", "--n", "7", "--no-cache"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["w3^3", "w2^2*w3", "w2^3 + w3^2"]

    def test_hilbert(self):
        result = runner.invoke(
            app,
            ["compute", "hilbert", "--ring", "oriented", "--t", "3", "--case", "minus1",
             "--gamma", "0", "--up-to", "12", "--no-cache"],
        )
        assert result.exit_code == 0
        assert result.stdout.strip() == "1,0,1,1,2,1,2,1,2,1,1,0,1"

    def test_basis(self):
        result = runner.invoke(app, ["compute", "basis", "--ring", "oriented", "--t", "3", "--degree", "12"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "a*w2*w3^2"

    def test_gysin(self):
        result = runner.invoke(app, ["compute", "gysin", "--n", "7", "--k", "3", "--up-to", "12", "--no-cache"])
        assert result.stdout.strip() == "1,0,1,1,2,1,2,1,2,1,1,0,1"

    def test_borel_needs_n(self):
        result = runner.invoke(app, ["compute", "hilbert", "--ring", "borel", "--up-to", "3"])
        assert result.exit_code == 2

    def test_out_of_range_parameter(self):
        result = runner.invoke(app, ["compute", "hilbert", "--ring", "oriented", "--t", "9", "--up-to", "3"])
        assert result.exit_code == 2

    def test_cache_written(self, tmp_path):
        result = runner.invoke(app, ["compute", "gb", "--ring", "borel", "--n", "6", "--k", "2", "--cache-dir", str(tmp_path)])
        assert result.exit_code == 0
        assert (tmp_path / "gb" / "borel_n6_k2.txt").is_file()


class TestVerify:
    def test_json_reports(self):
        result = runner.invoke(
            app, ["verify", "--t", "3..4", "--claim", "g-vanish", "--claim", "fukaya-lm", "--format", "json", "--no-cache"]
        )
        assert result.exit_code == 0
        reports = json_reports(result.stdout)
        assert [(r["claim_id"], r["params"]["t"]) for r in reports] == [
            ("fukaya-lm", 3), ("fukaya-lm", 4), ("g-vanish", 3), ("g-vanish", 4),
        ]
        assert {r["status"] for r in reports} == {"pass"}

    def test_table_output(self):
        result = runner.invoke(app, ["verify", "--t", "3", "--claim", "g-recurrence", "--no-cache"])
        assert result.exit_code == 0
        assert "g-recurrence" in result.stdout
        assert "pass" in result.stdout

    @pytest.mark.parametrize(
        "args",
        [["--claim", "prop-9.9"], ["--t", "9"], ["--t", "5..4"], ["--t", "three"]],
    )
    def test_usage_errors(self, args):
        result = runner.invoke(app, ["verify", *args, "--no-cache"])
        assert result.exit_code == 2


class TestCache:
    def test_clear_and_verify(self, tmp_path):
        runner.invoke(app, ["compute", "gb", "--ring", "imageJ", "--n", "7", "--cache-dir", str(tmp_path)])
        result = runner.invoke(app, ["cache", "verify", "--cache-dir", str(tmp_path)])
        assert result.exit_code == 0
        assert "imageJ_n7: ok" in result.stdout

        (tmp_path / "gb" / "imageJ_n7.txt").write_text("# order: w2:2,w3:3\nw2\n", encoding="utf-8")
        assert runner.invoke(app, ["cache", "verify", "--cache-dir", str(tmp_path)]).exit_code == 1

        result = runner.invoke(app, ["cache", "clear", "--cache-dir", str(tmp_path)])
        assert result.exit_code == 0
        assert "removed 1" in result.stdout


class TestEntryPoint:
    def test_run_returns_exit_codes(self, capsys):
        assert run(["compute", "g", "--r", "6"]) == 0
        assert capsys.readouterr().out.strip() == "w2^3 + w3^2"
        assert run(["verify", "--claim", "prop-9.9", "--no-cache"]) == 2

    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert result.stdout.strip() == __version__

    def test_t_range_parsing(self):
        settings = Settings(_env_file=None)
        assert parse_t_range("4", settings) == (4, 4)
        assert parse_t_range("3..6", settings) == (3, 6)
        assert parse_t_range(None, settings) == (3, 5)
