# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for the command-line interface."""

import json


def test_mul_quasi_shuffle(app, runner):
    """Test the default product."""
    result = runner.invoke(app, ["mul", "[1]", "[2]"])
    assert result.exit_code == 0
    assert result.stdout.strip() == (
        "[3] + [1 2] + [2 1] + [1;2] + [2;1] + [0 1;2 0] + [0 2;1 0] + [1 0;0 2] + [2 0;0 1]"
    )


def test_mul_json(app, runner):
    """Test JSON output of ↘."""
    result = runner.invoke(app, ["mul", "--op", "searrow", "--json", "[1]", "[1]"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"terms": [{"coeff": "1", "key": [[1, 0], [0, 1]]}]}


def test_cop_and_antipode(app, runner):
    """Test coproducts and the antipode."""
    result = runner.invoke(app, ["cop", "[1 1]"])
    assert result.stdout.strip() == "[] ⊗ [1 1] + 2*[1] ⊗ [1] + [1 1] ⊗ []"
    result = runner.invoke(app, ["cop", "--op", "delta", "[3]"])
    assert result.stdout.strip() == "[3] ⊗ [3]"
    result = runner.invoke(app, ["antipode", "[2]"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "-[2] + [1 0;0 1]"


def test_pair(app, runner):
    """Test the pairing on compositions."""
    result = runner.invoke(app, ["pair", "(1,2)", "2*(1,2) + (3)"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "2"


def test_count_pack(app, runner):
    """Test the packed-matrix counting table."""
    result = runner.invoke(app, ["count", "--seq", "pack", "--upto", "4"])
    assert result.exit_code == 0
    assert result.stdout == "0\t1\n1\t1\n2\t5\n3\t33\n4\t281\n"
    result = runner.invoke(app, ["count", "--seq", "gen", "--upto", "3", "--json"])
    assert json.loads(result.stdout) == {"seq": "gen", "start": 1, "values": [1, 4, 28]}


def test_enum(app, runner):
    """Test shell listing in canonical order."""
    result = runner.invoke(app, ["enum", "--weight", "2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["[2]", "[1 1]", "[1;1]", "[0 1;1 0]", "[1 0;0 1]"]


def test_parse_error_exit_code(app, runner):
    """Test that malformed input exits with 2 and names the row."""
    result = runner.invoke(app, ["mul", "[1 0;2]", "[1]"])
    assert result.exit_code == 2
    assert "ragged row at row 2" in result.stderr


def test_guard_exit_code(app, runner):
    """Test that a guard violation exits with 3 and names the flag."""
    result = runner.invoke(app, ["--delta-max-dim", "1", "cop", "--op", "delta", "[1 1]"])
    assert result.exit_code == 3
    assert "--delta-max-dim" in result.stderr
    result = runner.invoke(app, ["--max-weight", "1", "enum", "--weight", "2"])
    assert result.exit_code == 3
    assert "--max-weight" in result.stderr


def test_delta_on_a_heavy_two_by_two(app, runner):
    """Test that δ accepts a 2×2 matrix above the weight guard."""
    result = runner.invoke(app, ["cop", "--op", "delta", "--json", "[1 2;3 4]"])
    assert result.exit_code == 0
    terms = json.loads(result.stdout)["terms"]
    assert len(terms) == 16
    assert {"coeff": "1", "key": [[[10]], [[1, 2], [3, 4]]]} in terms


def test_morph(app, runner):
    """Test morphisms with and without a point."""
    result = runner.invoke(app, ["morph", "--name", "kappa-xy", "--x", "2", "--y", "3", "[1 0;0 1]"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "3*(2) + 36*(1,1)"
    result = runner.invoke(app, ["morph", "--name", "phi", "[1 0;0 1]"])
    assert result.stdout.strip() == "1/2*X^2 - 1/2*X"
    result = runner.invoke(app, ["morph", "--name", "theta", "(1)"])
    assert result.stdout.strip() == "[1]"


def test_morph_usage_errors(app, runner):
    """Test missing and unexpected points."""
    result = runner.invoke(app, ["morph", "--name", "kappa-xy", "[1]"])
    assert result.exit_code == 2
    assert "needs both --x and --y" in result.stderr
    result = runner.invoke(app, ["morph", "--name", "upsilon", "--x", "1", "[1]"])
    assert result.exit_code == 2


def test_sig(app, runner, tmp_path):
    """Test evaluation on a grid file."""
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"rows": 2, "cols": 2, "values": [["1", "2"], ["3", "4"]]}))
    result = runner.invoke(app, ["sig", "--matrix", "[1 1]", "--grid", str(grid)])
    assert result.exit_code == 0
    assert result.stdout.strip() == "14"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rows": 2, "cols": 2, "values": [["1", "2"]]}))
    result = runner.invoke(app, ["sig", "--matrix", "[1]", "--grid", str(bad)])
    assert result.exit_code == 2
    assert "invalid grid file" in result.stderr


def test_verify_command(app, runner):
    """Test a passing suite run."""
    result = runner.invoke(app, ["verify", "--suite", "counts", "--max-weight", "2"])
    assert result.exit_code == 0
    assert "counts\tpack-table\tok" in result.stdout


def test_sig_rejects_binary_grid(app, runner, tmp_path):
    """Test that a grid file that is not UTF-8 exits with 2."""
    grid = tmp_path / "grid.json"
    grid.write_bytes(b'{"rows": 1, "cols": 1, "values": [["\xff"]]}')
    result = runner.invoke(app, ["sig", "--matrix", "[1]", "--grid", str(grid)])
    assert result.exit_code == 2
    assert "is not UTF-8 text" in result.stderr


def test_verify_weight_above_guard(app, runner):
    """Test that a suite weight above the shell guard fails before any identity runs."""
    args = ["--max-weight", "2", "verify", "--suite", "counts", "--max-weight", "3"]
    result = runner.invoke(app, args)
    assert result.exit_code == 3
    assert result.stdout == ""
    assert "max_weight guard: 3 exceeds limit 2" in result.stderr


def test_verify_default_weight(app, runner):
    """Test the morphism suite at the default weight of three."""
    result = runner.invoke(app, ["verify", "--suite", "morphisms"])
    assert result.exit_code == 0
    assert "morphisms\ttheta-delta\tok" in result.stdout
    assert result.stdout.count("\tok\t") == result.stdout.count("\n")
