#!/usr/bin/env python
"""
Tests for rieszuncertain.rieszuncertainscenarios.
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
# Purpose:  Sequence families, scenario files, the corpus inclusion table
#           and the Tauberian evidence.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import copy
import os

import numpy
import pytest

from rieszuncertain.rieszuncertaincore import UncertaintySpace
from rieszuncertain.rieszuncertaincore import validate_space
from rieszuncertain.rieszuncertainscenarios import assemble_inclusion_table
from rieszuncertain.rieszuncertainscenarios import builtin_family
from rieszuncertain.rieszuncertainscenarios import find_scenario_files
from rieszuncertain.rieszuncertainscenarios import inclusion_table
from rieszuncertain.rieszuncertainscenarios import load_corpus
from rieszuncertain.rieszuncertainscenarios import oscillating_counterexample
from rieszuncertain.rieszuncertainscenarios import parse_scenario_dict
from rieszuncertain.rieszuncertainscenarios import parse_scenario_file
from rieszuncertain.rieszuncertainscenarios import tauberian_evidence
from rieszuncertain.rieszuncertainsummability import WeightSequence
from rieszuncertain.rieszuncertainsummability import transform_sequence
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainutils import RieszUncertainParseException

BASE_SCENARIO = {
    "name": "base",
    "space": {"atoms": ["g1", "g2"], "kind": "additive", "weights": [0.5, 0.5]},
    "sequence": {"family": "decay", "params": {"c": 1.0, "alpha": 1.0}, "limit": 0.0, "horizon": 50},
    "weights": {"kind": "constant"}
}


def _scenario_dict(**changes):
    data = copy.deepcopy(BASE_SCENARIO)
    for key, val in changes.items():
        data[key] = val
    return data


def test_spike_and_block_families(one_atom_space):
    spike = builtin_family("spike", {"c": 2.0}, one_atom_space, 10, limit=1.0)
    assert list(spike.as_array()[:3, 0]) == [3.0, 1.0, 1.0]
    block = builtin_family("block_oscillating", {"scale": 0.01}, one_atom_space, 5)
    assert numpy.allclose(block.as_array()[:, 0], [-0.01, 0.005, -0.0025, 0.0025, -0.00125])


def test_oscillating_family_defaults_to_midpoint(one_atom_space):
    seq = builtin_family("oscillating", {"high": 3.0, "low": 1.0}, one_atom_space, 4)
    assert list(seq.limit.values) == [2.0]
    assert list(seq.as_array()[:, 0]) == [3.0, 1.0, 3.0, 1.0]


def test_preimage_family_transforms_to_decay(additive_space):
    weights = WeightSequence("harmonic")
    seq = builtin_family("preimage", {"c": 1.0, "alpha": 2.0}, additive_space, 200, limit=[0.0, 1.0, 2.0],
                         weights=weights)
    n_idx = numpy.arange(1, 201, dtype=float)
    expected = numpy.array([0.0, 1.0, 2.0])[None, :] + (1.0 / n_idx ** 2)[:, None]
    assert numpy.allclose(transform_sequence(seq.as_array(), weights), expected, atol=1e-9)
    with pytest.raises(RieszUncertainInputException):
        builtin_family("preimage", {}, additive_space, 20)


def test_atomwise_mixed_family():
    space = UncertaintySpace.from_additive(["g1", "g2"], [0.5, 0.5])
    atoms = [{"family": "spike", "params": {"c": 1.0}}, {"family": "constant", "params": {"value": 4.0}}]
    seq = builtin_family("atomwise_mixed", {"atoms": atoms}, space, 10)
    assert list(seq.limit.values) == [0.0, 4.0]
    assert list(seq.as_array()[0]) == [1.0, 4.0]
    with pytest.raises(RieszUncertainInputException):
        builtin_family("atomwise_mixed", {"atoms": atoms[:1]}, space, 10)
    with pytest.raises(RieszUncertainInputException):
        builtin_family("atomwise_mixed", {"atoms": [atoms[0], {"family": "preimage"}]}, space, 10)
    with pytest.raises(RieszUncertainInputException):
        builtin_family("atomwise_mixed", {"atoms": [atoms[0], "constant"]}, space, 10)
    with pytest.raises(RieszUncertainInputException):
        builtin_family("sawtooth", {}, space, 10)


def test_parse_scenario_dict():
    scenario = parse_scenario_dict(_scenario_dict())
    assert scenario.name == "base"
    assert scenario.horizon == 50
    assert scenario.orlicz.is_identity
    assert scenario.sequence().as_array().shape == (50, 2)
    assert scenario.diagnostic_config().horizon == 50


def test_parse_rejects_structural_problems():
    data = _scenario_dict()
    del data["name"]
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(data)
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(diagnostics={"colour": "red"}))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(weights={"kind": "triangular"}))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(sequence={"family": "decay", "limit": 0.0, "horizon": 5}))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict([BASE_SCENARIO])
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(weights={"kind": "geometric", "params": {"ratio": "half"}}))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(space={"atoms": ["g1", "g2", "g3"], "kind": "explicit",
                                                  "table": [{"subset": ["g1"], "value": 0.2},
                                                            {"subset": ["g1", "g2"], "value": 0.6}]}))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_dict(_scenario_dict(sequence={"family": "atomwise_mixed", "params": {"atoms": [1, 2]},
                                                     "limit": 0.0, "horizon": 50}))


def test_parse_rejects_invalid_content():
    with pytest.raises(RieszUncertainInputException):
        parse_scenario_dict(_scenario_dict(space={"atoms": ["g1", "g2"], "kind": "additive",
                                                  "weights": [-0.5, 1.5]}))
    with pytest.raises(RieszUncertainInputException):
        parse_scenario_dict(_scenario_dict(weights={"kind": "constant", "params": {"value": -1.0}}))


def test_fixture_files(fixture_file):
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_file(fixture_file("malformed.json"))
    with pytest.raises(RieszUncertainParseException):
        parse_scenario_file(fixture_file("missing.json"))
    with pytest.raises(RieszUncertainInputException):
        parse_scenario_file(fixture_file("nonconvex_orlicz.json"))
    duality = parse_scenario_file(fixture_file("duality_violation.json"))
    assert not validate_space(duality.space).get_check("duality").passed
    table = parse_scenario_file(fixture_file("table_orlicz.json"))
    assert not table.orlicz.is_identity
    assert "f_R^phi" in table.classify().class_verdicts


def test_find_scenario_files(corpus_dir, tmp_path):
    files = find_scenario_files(corpus_dir)
    assert [os.path.basename(f) for f in files][:2] == ["atomwise_mixed.json", "block_oscillating.json"]
    with pytest.raises(RieszUncertainParseException):
        find_scenario_files(str(tmp_path))
    with pytest.raises(RieszUncertainParseException):
        find_scenario_files(str(tmp_path / "nowhere"))


def test_counterexample_golden_data():
    scenario = oscillating_counterexample(1000)
    report = scenario.classify()
    assert report.verdict("f") == "fail"
    assert report.verdict("f_R") == "pass"
    assert scenario.golden_mismatches(report) == []
    short = scenario.classify(horizon=100)
    assert short.config.horizon == 100
    with pytest.raises(RieszUncertainInputException):
        scenario.diagnostic_config(colour="red")


def test_corpus_inclusion_table(corpus_dir):
    scenarios = load_corpus(corpus_dir)
    assert len(scenarios) == 7
    table = inclusion_table(scenarios)
    assert table.is_clean(), table.violations
    assert table.cell_counts("f") == {"pass": 5, "fail": 2, "inconclusive": 0}
    assert "oscillating_counterexample" in table.witnesses(["m_R", "f_R"])
    assert "oscillating_counterexample" not in table.witnesses(["f"])


def test_corrupted_corpus_is_flagged(fixture_file):
    table = inclusion_table(load_corpus(fixture_file("corrupted_corpus")))
    assert not table.is_clean()
    assert table.violations == [("oscillating_counterexample_corrupted",
                                 "golden verdict f=pass but classified fail")]


def test_inclusion_table_errors():
    with pytest.raises(RieszUncertainInputException):
        inclusion_table([])
    report = oscillating_counterexample(100).classify()
    with pytest.raises(RieszUncertainInputException):
        assemble_inclusion_table([("a", report, []), ("a", report, [])])


def test_block_oscillating_tauberian_evidence(corpus_file):
    evidence = tauberian_evidence(parse_scenario_file(corpus_file("block_oscillating")))
    assert evidence.weight_profile.verdict == "HOLDS"
    assert evidence.weight_profile.tail_max == pytest.approx(0.1033, abs=1e-3)
    assert evidence.weight_profile.values[-1] == pytest.approx(0.1022, abs=1e-4)
    assert evidence.hypotheses_hold
    assert evidence.budget.summable
    assert evidence.raw_tail_gap < 1e-2
    assert evidence.conclusion_supported


def test_counterexample_lacks_tauberian_hypotheses():
    evidence = tauberian_evidence(oscillating_counterexample(1000))
    assert evidence.weight_profile.verdict == "FAILS"
    assert not evidence.hypotheses_hold
    assert not evidence.conclusion_supported
