#!/usr/bin/env python
"""
Tests for rieszuncertain.rieszuncertainorlicz.
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
# Purpose:  Orlicz function checks and Orlicz moments.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import numpy
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszuncertain.rieszuncertaincore import UncertainSequence
from rieszuncertain.rieszuncertaincore import UncertaintySpace
from rieszuncertain.rieszuncertaincore import expected_value
from rieszuncertain.rieszuncertainorlicz import OrliczSpec
from rieszuncertain.rieszuncertainorlicz import orlicz_moment
from rieszuncertain.rieszuncertainorlicz import orlicz_p_gap
from rieszuncertain.rieszuncertainorlicz import orlicz_p_gap_profile
from rieszuncertain.rieszuncertainorlicz import validate_orlicz
from rieszuncertain.rieszuncertainsummability import WeightSequence
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainverify import random_space


@pytest.mark.parametrize("spec", [OrliczSpec.identity(), OrliczSpec.power(2.0), OrliczSpec.power(1.5),
                                  OrliczSpec.expm1(),
                                  OrliczSpec.table([[0.0, 0.0], [1.0, 1.0], [2.0, 3.0], [3.0, 6.0]])])
def test_builtin_orlicz_functions_are_valid(spec):
    report = validate_orlicz(spec)
    assert report.is_valid(), report.summary_lines()


def test_concave_function_fails_convexity():
    report = validate_orlicz(OrliczSpec("sqrt", numpy.sqrt))
    assert not report.get_check("midpoint_convex").passed
    assert report.get_check("zero_at_origin").passed
    assert report.get_check("strictly_increasing").passed


def test_shifted_function_fails_origin():
    report = validate_orlicz(OrliczSpec("shifted", lambda x: numpy.asarray(x, dtype=float) + 1.0))
    assert not report.get_check("zero_at_origin").passed


def test_bounded_function_fails_growth():
    report = validate_orlicz(OrliczSpec("bounded", lambda x: -numpy.expm1(-numpy.asarray(x, dtype=float))))
    assert not report.get_check("unbounded_trend").passed


def test_flat_function_fails_monotonicity():
    report = validate_orlicz(OrliczSpec("flat", lambda x: numpy.maximum(numpy.asarray(x, dtype=float) - 1.0,
                                                                          0.0)))
    assert not report.get_check("strictly_increasing").passed


def test_non_finite_function_is_rejected():
    with pytest.raises(RieszUncertainInputException):
        validate_orlicz(OrliczSpec("huge", lambda x: numpy.exp(numpy.exp(numpy.asarray(x, dtype=float))) - numpy.e))


def test_invalid_specifications():
    with pytest.raises(RieszUncertainInputException):
        OrliczSpec.power(0.5)
    with pytest.raises(RieszUncertainInputException):
        OrliczSpec.identity(p=0.5)
    with pytest.raises(RieszUncertainInputException):
        OrliczSpec.table([[0.0, 0.0], [1.0, 2.0], [2.0, 3.0]])
    with pytest.raises(RieszUncertainInputException):
        OrliczSpec.table([[0.0, 0.0], [0.0, 1.0]])
    with pytest.raises(RieszUncertainInputException):
        validate_orlicz(OrliczSpec.identity(), grid_points=8)


def test_table_extrapolates_with_last_slope():
    spec = OrliczSpec.table([[0.0, 0.0], [1.0, 1.0], [2.0, 3.0]])
    assert numpy.allclose(spec(numpy.array([0.5, 1.5, 4.0])), [0.5, 2.0, 7.0])


def test_orlicz_moment(additive_space):
    values = numpy.array([-1.0, 0.0, 2.0])
    assert orlicz_moment(additive_space, values, OrliczSpec.identity()) == pytest.approx(0.2 + 0.5 * 2.0)
    assert orlicz_moment(additive_space, values, OrliczSpec.power(2.0)) == pytest.approx(0.2 + 0.5 * 4.0)


def test_orlicz_p_gap_on_decay(one_atom_space):
    horizon = 50
    n_idx = numpy.arange(1, horizon + 1, dtype=float)
    seq = UncertainSequence(one_atom_space, 0.0, horizon, values=(1.0 / n_idx)[:, None])
    weights = WeightSequence("constant")
    harmonic_mean = numpy.cumsum(1.0 / n_idx) / n_idx
    assert orlicz_p_gap(seq, weights, OrliczSpec.identity(), 10) == pytest.approx(harmonic_mean[9])
    assert orlicz_p_gap(seq, weights, OrliczSpec.power(2.0, p=2.0), 10) == pytest.approx(harmonic_mean[9] ** 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(min_value=0.0, max_value=3.0, allow_nan=False), min_size=3, max_size=3),
       st.sampled_from([1.0, 2.0, 3.0]))
def test_profile_agrees_with_pointwise_moments(deviations, p):
    possibility_space = UncertaintySpace.from_possibility(["g1", "g2", "g3"], [1.0, 0.3, 0.5], dual=True)
    spec = OrliczSpec.expm1(p=p)
    rows = numpy.array([deviations])
    profile = orlicz_p_gap_profile(possibility_space, rows, spec)
    direct = expected_value(possibility_space, numpy.expm1(numpy.power(rows[0], p))) ** (1.0 / p)
    assert profile[0] == pytest.approx(direct, rel=1e-9, abs=1e-12)


_ORLICZ_SPECS = {"identity": OrliczSpec.identity(), "square": OrliczSpec.power(2.0), "expm1": OrliczSpec.expm1(),
                 "square_p2": OrliczSpec.power(2.0, p=2.0)}


def _constant_deviation_sequence(space, limit, deviation, horizon=10):
    values = numpy.tile(numpy.asarray(limit, dtype=float) + numpy.asarray(deviation, dtype=float), (horizon, 1))
    return UncertainSequence(space, limit, horizon, values=values)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.one_of(st.just(0.0), st.floats(min_value=1e-3, max_value=2.0)), min_size=3, max_size=3),
       st.lists(st.floats(min_value=0.05, max_value=1.0), min_size=3, max_size=3),
       st.sampled_from(sorted(_ORLICZ_SPECS.keys())), st.integers(min_value=1, max_value=10))
def test_orlicz_p_gap_is_zero_only_at_the_limit(deviation, atom_weights, spec_name, n):
    space = UncertaintySpace.from_additive(["g1", "g2", "g3"], atom_weights)
    limit = [0.5, -1.0, 2.0]
    seq = _constant_deviation_sequence(space, limit, deviation)
    gap = orlicz_p_gap(seq, WeightSequence("constant"), _ORLICZ_SPECS[spec_name], n)
    if all(d == 0.0 for d in deviation):
        assert gap == 0.0
    else:
        assert gap > 0.0


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.sampled_from(sorted(_ORLICZ_SPECS.keys())))
def test_orlicz_p_gap_grows_with_the_deviation(seed, spec_name):
    rng = numpy.random.default_rng(seed)
    space = random_space(rng, max_atoms=4)
    deviation = rng.uniform(0.0, 1.5, space.n_atoms)
    zero_limit = numpy.zeros(space.n_atoms)
    weights = WeightSequence("constant")
    gaps = [orlicz_p_gap(_constant_deviation_sequence(space, zero_limit, scale * deviation), weights,
                         _ORLICZ_SPECS[spec_name], 5) for scale in (0.0, 0.25, 0.5, 1.0, 2.0)]
    assert gaps[0] == 0.0
    assert all(later >= earlier - 1e-12 * max(1.0, earlier) for earlier, later in zip(gaps, gaps[1:]))
