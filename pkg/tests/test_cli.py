#!/usr/bin/env python
"""
Tests for rieszuncertain.rieszuncertaincli.
"""
# This file is part of 'RieszUncertain'
# A tool for Riesz-type summability diagnostics of uncertain sequences.
#
# Copyright 2026 RieszUncertain Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
#
# Purpose:  Commands, exit codes and the usage log of the command line.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import io
import json
import logging
import os
import runpy
import sys

import pytest

import rieszuncertain.rieszuncertainrun
from rieszuncertain.rieszuncertaincli import main
from rieszuncertain.rieszuncertaincli import parse_run_config
from rieszuncertain.rieszuncertainusagedb import RieszUncertainUsageLogDB
from rieszuncertain.rieszuncertainutils import RieszUncertainParseException
from rieszuncertain.rieszuncertainverify import SuiteResult


def _run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_validate(corpus_file, fixture_file):
    code, text = _run(["validate", corpus_file("constant")])
    assert code == 0
    assert text.startswith("constant: VALID\n")
    assert "duality: pass" in text
    assert _run(["validate", fixture_file("duality_violation.json")])[0] == 1
    assert _run(["validate", fixture_file("malformed.json")])[0] == 2
    assert _run(["validate", fixture_file("nonconvex_orlicz.json")])[0] == 1


def test_classify_to_stream(corpus_file):
    code, text = _run(["classify", corpus_file("oscillating_counterexample")])
    assert code == 0
    assert "f,-,0.500000000000,fail" in text.splitlines()
    code, text = _run(["classify", corpus_file("oscillating_counterexample"), "--format", "md"])
    assert code == 0
    assert text.startswith("# Class report: oscillating_counterexample")


def test_classify_to_files(corpus_file, tmp_path):
    stem = tmp_path / "counterexample"
    code, text = _run(["classify", corpus_file("oscillating_counterexample"), "--out", str(stem) + ".csv"])
    assert code == 0
    assert text == ""
    assert "f,-,0.500000000000,fail" in (tmp_path / "counterexample.csv").read_text(encoding="utf-8").splitlines()
    assert (tmp_path / "counterexample.md").read_text(encoding="utf-8").startswith("# Class report")


def test_classify_invalid_scenario(fixture_file):
    assert _run(["classify", fixture_file("duality_violation.json")])[0] == 1


def _write_scenario(tmp_path, **changes):
    data = {"name": "edited",
            "space": {"atoms": ["g1", "g2"], "kind": "additive", "weights": [0.5, 0.5]},
            "sequence": {"family": "decay", "params": {"c": 1.0, "alpha": 1.0}, "limit": 0.0, "horizon": 50},
            "weights": {"kind": "constant"}}
    data.update(changes)
    path = tmp_path / "edited.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.mark.parametrize("changes", [
    {"weights": {"kind": "constant", "params": {"value": "abc"}}},
    {"weights": {"kind": "explicit", "params": {"values": ["a", "b"]}}},
    {"weights": {"kind": "explicit"}},
    {"sequence": {"family": "decay", "params": {"c": "big"}, "limit": 0.0, "horizon": 50}},
    {"sequence": {"family": "atomwise_mixed", "params": {"atoms": ["decay", "decay"]}, "limit": 0.0,
                  "horizon": 50}},
    {"sequence": {"family": "atomwise_mixed", "params": {"atoms": [{"family": "decay", "params": {"c": [1]}},
                                                                   {"family": "constant"}]},
                  "limit": 0.0, "horizon": 50}},
    {"space": {"atoms": ["g1", "g2"], "kind": "explicit", "table": [{"subset": ["g1"], "value": 0.5}]}},
    {"orlicz": {"phi": "table", "breakpoints": [["a", 0.0], [1.0, 1.0]]}},
    {"orlicz": {"phi": "table", "breakpoints": [0.0, 1.0]}}])
def test_malformed_scenario_content_is_an_input_failure(tmp_path, changes):
    path = _write_scenario(tmp_path, **changes)
    assert _run(["validate", path])[0] == 2
    assert _run(["classify", path])[0] == 2
    assert _run(["transform", path, "--n", "5"])[0] == 2


def test_invalid_scenario_content_is_a_domain_failure(tmp_path):
    path = _write_scenario(tmp_path, weights={"kind": "constant", "params": {"value": -1.0}})
    assert _run(["classify", path])[0] == 1
    assert _run(["classify", _write_scenario(tmp_path)])[0] == 0


def test_classify_overrides(corpus_file):
    code, text = _run(["classify", corpus_file("spike"), "--horizon", "100", "--eps", "0.5", "--tol", "1e-1",
                       "--lambda", "1"])
    assert code == 0
    lines = text.splitlines()
    assert "m,eps=0.5,0.000000000000,pass" in lines
    assert not any(line.startswith("m,eps=0.01") for line in lines)
    assert any(line.startswith("so,lambda=1;eps=0.5,") for line in lines)


def test_table(corpus_dir, fixture_file, tmp_path):
    code, text = _run(["table", corpus_dir])
    assert code == 0
    assert "oscillating_counterexample,f,fail" in text.splitlines()
    assert _run(["table", fixture_file("corrupted_corpus")])[0] == 1
    assert _run(["table", str(tmp_path)])[0] == 2


def test_transform(corpus_file):
    code, text = _run(["transform", corpus_file("oscillating_counterexample"), "--n", "5", "6"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "n,atom,nu,roundtrip_residual"
    assert lines[1].startswith("5,g1,0.600000000000,")
    assert lines[2].startswith("6,g1,0.500000000000,")
    assert _run(["transform", corpus_file("oscillating_counterexample"), "--n", "1001"])[0] == 1


def test_transform_refuses_invalid_scenario(fixture_file):
    assert _run(["transform", fixture_file("duality_violation.json"), "--n", "5"])[0] == 1
    assert _run(["transform", fixture_file("nonconvex_orlicz.json"), "--n", "5"])[0] == 1


def test_bad_options(corpus_file):
    assert _run(["classify", corpus_file("constant"), "--horizon", "5"])[0] == 2
    assert _run(["classify", corpus_file("constant"), "--eps", "0.1,x"])[0] == 2
    assert _run(["classify", corpus_file("constant"), "--tol", "0"])[0] == 2
    assert _run(["summarise"])[0] == 2
    assert _run(["transform", corpus_file("constant")])[0] == 2


def test_run_config_checks(corpus_file):
    run_config = parse_run_config(["classify", corpus_file("constant"), "--eps", "0.1,0.01", "--tol", "1e-3"])
    assert run_config.overrides() == {"horizon": None, "epsilon_grid": [0.1, 0.01], "lambda_grid": None,
                                      "tolerance": 1e-3}
    with pytest.raises(RieszUncertainParseException):
        parse_run_config(["classify", corpus_file("constant"), "--lambda", "-1"])


def test_check_reports_suite_violations(monkeypatch):
    results = [SuiteResult("markov", 10, 0, 0.0, 1e-12), SuiteResult("affine", 10, 2, 1e-9, 1e-12)]
    monkeypatch.setattr(rieszuncertain.rieszuncertainrun, "run_all_suites", lambda seed, scenarios: results)
    code, text = _run(["check", "--seed", "3"])
    assert code == 1
    lines = text.splitlines()
    assert lines[0] == "suite,instances,violations,worst,tolerance"
    assert lines[2] == "affine,10,2,1.000e-09,1e-12"
    monkeypatch.setattr(rieszuncertain.rieszuncertainrun, "run_all_suites", lambda seed, scenarios: results[:1])
    assert _run(["check"])[0] == 0


def test_usage_is_recorded(corpus_file, tmp_path, monkeypatch):
    db_conn = "sqlite:///{}".format(tmp_path / "usage.db")
    monkeypatch.setenv("RIESZ_UNCERTAIN_USAGE_DB", db_conn)
    assert _run(["validate", corpus_file("constant"), "--record-db"])[0] == 0
    entries = RieszUncertainUsageLogDB(db_conn).get_entries()
    assert [(entry[0], entry[3], entry[4], entry[5]) for entry in entries] == [("validate", None, True, False),
                                                                               ("validate", 0, False, True)]
    assert entries[0][2] == corpus_file("constant")


def test_rzu_script_logs_run_time(corpus_file, monkeypatch, caplog):
    script = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "bin", "rzu.py")
    monkeypatch.setattr(sys, "argv", ["rzu.py", "validate", corpus_file("constant")])
    with caplog.at_level(logging.INFO, logger="rzu.py"):
        with pytest.raises(SystemExit) as exit_info:
            runpy.run_path(script, run_name="__main__")
    assert exit_info.value.code == 0
    assert "RieszUncertain started: validate" in caplog.text
    assert "processing completed" in caplog.text
