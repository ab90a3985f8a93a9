# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for the identity suites and their runner."""

import json

import pytest

from src.errors import ResourceGuardError, UsageError, VerificationFailure
from src.extensions import guards
from src.verify import REGISTRY, SUITES, run_suite
from src.verify.harness import Identity, VerifyContext


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_at_low_weight(suite):
    """Test that every registered identity holds at weight two."""
    results = run_suite(suite, max_weight=2, seed=1)
    assert [r.name for r in results] == [item.name for item in REGISTRY[suite]]
    assert all(r.weight <= 2 for r in results)


def test_morphisms_at_weight_three():
    """Test the morphism suite, θ against δ included, at weight three."""
    results = run_suite("morphisms", max_weight=3, seed=4)
    assert {r.name for r in results} >= {"theta-bialgebra", "theta-delta", "kappa-delta"}
    assert max(r.weight for r in results) == 3


def test_suite_weight_is_guarded():
    """Test that run_suite refuses a weight above the shell guard."""
    guards.set_limit("max_weight", 2)
    with pytest.raises(ResourceGuardError, match="--max-weight"):
        run_suite("counts", max_weight=3)


@pytest.mark.slow
def test_axioms_at_weight_four():
    """Test the axiom suite at weight four."""
    results = run_suite("axioms", max_weight=4)
    assert {r.name: r.weight for r in results}["adm-coassociativity"] == 4


@pytest.mark.slow
def test_cli_default_run(app, runner):
    """Test `pmh verify` with every default."""
    result = runner.invoke(app, ["verify"])
    assert result.exit_code == 0
    assert {line.split("\t")[0] for line in result.stdout.splitlines()} == set(SUITES)


def test_report_callback():
    """Test that the runner reports each identity as it finishes."""
    seen = []
    run_suite("counts", max_weight=1, report=seen.append)
    assert [r.name for r in seen] == [item.name for item in REGISTRY["counts"]]
    assert seen[0].summary().startswith("counts\tpack-table\tok\t")


def test_unknown_suite():
    """Test that an unknown suite name is a usage error."""
    with pytest.raises(UsageError, match="unknown suite"):
        run_suite("nope", max_weight=1)


def test_context_records_counterexample():
    """Test the first failing case becomes a counterexample."""
    ctx = VerifyContext("axioms", "demo", max_weight=3)
    ctx.expect(1, 1, n=0)
    with pytest.raises(VerificationFailure) as info:
        ctx.expect(1, 2, n=1)
    example = info.value.counterexample
    assert example.inputs == {"n": "1"}
    assert (example.lhs, example.rhs) == ("1", "2")
    assert ctx.cases == 2
    assert ctx.cap(5) == 3


def test_cli_prints_counterexample(app, runner, monkeypatch):
    """Test exit code 1 and the JSON counterexample on failure."""

    def broken(ctx):
        ctx.expect(ctx.max_weight, -1, weight=ctx.max_weight)

    monkeypatch.setitem(REGISTRY, "counts", [Identity("counts", "broken", 2, broken)])
    result = runner.invoke(app, ["verify", "--suite", "counts", "--max-weight", "1"])
    assert result.exit_code == 1
    document = json.loads(result.stdout)
    assert document["identity"] == "broken"
    assert document["inputs"] == {"weight": "1"}
    assert "counts/broken failed" in result.stderr
