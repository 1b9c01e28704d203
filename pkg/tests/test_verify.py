#!/usr/bin/env python
"""
Tests for rieszuncertain.rieszuncertainverify.
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
# Purpose:  The seeded instance suites and the quadrature oracle.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import numpy
import pytest

from rieszuncertain.rieszuncertaincore import expected_value
from rieszuncertain.rieszuncertainscenarios import load_corpus
from rieszuncertain.rieszuncertainscenarios import oscillating_counterexample
from rieszuncertain.rieszuncertainverify import DEFAULT_SEED
from rieszuncertain.rieszuncertainverify import affine_suite
from rieszuncertain.rieszuncertainverify import er_within_mr_suite
from rieszuncertain.rieszuncertainverify import expected_value_oracle_suite
from rieszuncertain.rieszuncertainverify import markov_suite
from rieszuncertain.rieszuncertainverify import quadrature_expected_value
from rieszuncertain.rieszuncertainverify import random_space
from rieszuncertain.rieszuncertainverify import roundtrip_suite
from rieszuncertain.rieszuncertainverify import run_all_suites
from rieszuncertain.rieszuncertainverify import row_stochastic_suite
from rieszuncertain.rieszuncertainverify import uniqueness_suite


def test_random_spaces_are_valid():
    rng = numpy.random.default_rng(1)
    for _ in range(20):
        space = random_space(rng, max_atoms=4)
        assert 1 <= space.n_atoms <= 4
        assert space.measure_of_mask(space.full_mask) == pytest.approx(1.0)


def test_quadrature_oracle(additive_space, possibility_space):
    values = numpy.array([-1.5, 0.25, 2.0])
    assert quadrature_expected_value(additive_space, values) == pytest.approx(
        expected_value(additive_space, values), abs=1e-4)
    assert quadrature_expected_value(possibility_space, values) == pytest.approx(
        expected_value(possibility_space, values), abs=1e-4)
    assert quadrature_expected_value(additive_space, numpy.zeros(3)) == 0.0


@pytest.mark.parametrize("suite, kwargs", [(markov_suite, {"instances": 100}),
                                           (roundtrip_suite, {"sequences": 5, "length": 200}),
                                           (row_stochastic_suite, {"sequences": 3, "max_row": 100}),
                                           (expected_value_oracle_suite, {"instances": 10, "max_atoms": 4}),
                                           (uniqueness_suite, {"instances": 100}),
                                           (affine_suite, {"instances": 100})])
def test_suites_pass(suite, kwargs):
    result = suite(seed=20240601, **kwargs)
    assert result.passed, repr(result)
    assert result.worst <= result.tolerance


def test_suites_are_reproducible():
    first = markov_suite(seed=5, instances=50)
    second = markov_suite(seed=5, instances=50)
    assert first.worst == second.worst
    assert first.instances == 50


def test_er_within_mr_on_corpus(corpus_dir):
    scenarios = [scenario for scenario in load_corpus(corpus_dir) if scenario.horizon <= 1000]
    scenarios.append(oscillating_counterexample(200))
    result = er_within_mr_suite(scenarios)
    assert result.passed, repr(result)
    assert result.instances > 0


def test_default_suites_pass():
    results = run_all_suites(DEFAULT_SEED)
    assert [result.name for result in results] == ["markov", "roundtrip", "row_stochastic", "expected_value_oracle",
                                                   "uniqueness", "affine"]
    assert [result.instances for result in results] == [1000, 100, 100, 200, 1000, 500]
    assert all(result.passed for result in results), results
