#!/usr/bin/env python
"""
RieszUncertain - seeded randomized instance suites checking the exact
instance inequalities and identities behind the library: the Markov-type
bound, the e_R within m_R law, the inverse transform round trip, Riesz row
stochasticity, the expected value against a quadrature oracle, the
uniqueness bound and positive affine equivariance.
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
# Purpose:  Property suites run from the command line ('check') and tests.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import time

import numpy

from rieszuncertain.rieszuncertaincore import UncertaintySpace
from rieszuncertain.rieszuncertaincore import expected_value
from rieszuncertain.rieszuncertainconvergence import markov_check
from rieszuncertain.rieszuncertainconvergence import mean_gap_profile
from rieszuncertain.rieszuncertainconvergence import measure_gap_profile
from rieszuncertain.rieszuncertainconvergence import uniqueness_values
from rieszuncertain.rieszuncertainorlicz import OrliczSpec
from rieszuncertain.rieszuncertainsummability import WeightSequence
from rieszuncertain.rieszuncertainsummability import inverse_transform_sequence
from rieszuncertain.rieszuncertainsummability import riesz_row
from rieszuncertain.rieszuncertainsummability import transform_sequence

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
QUADRATURE_STEP = 1e-5


class SuiteResult(object):

    def __init__(self, name, instances, violations, worst, tolerance, seconds=0.0):
        """
        :param name: suite name.
        :param instances: number of instances checked.
        :param violations: number of instances breaking the property.
        :param worst: largest excess (or error) observed.
        :param tolerance: tolerance of the property.
        """
        self.name = name
        self.instances = instances
        self.violations = violations
        self.worst = worst
        self.tolerance = tolerance
        self.seconds = seconds

    @property
    def passed(self):
        return self.violations == 0

    def __repr__(self):
        return "SuiteResult({}: {} instances, {} violations, worst={:.3g}, tol={:g}, {:.2f} s)".format(
            self.name, self.instances, self.violations, self.worst, self.tolerance, self.seconds)


def random_space(rng, max_atoms=8):
    """
    A random additive or dual possibility space with 1..max_atoms atoms.
    """
    n_atoms = int(rng.integers(1, max_atoms + 1))
    atoms = ["g{}".format(i + 1) for i in range(n_atoms)]
    if rng.random() < 0.5:
        return UncertaintySpace.from_additive(atoms, rng.uniform(0.05, 1.0, n_atoms))
    weights = rng.uniform(0.0, 1.0, n_atoms)
    weights[int(rng.integers(0, n_atoms))] = 1.0
    return UncertaintySpace.from_possibility(atoms, weights, dual=True)


def quadrature_expected_value(space, values, step=QUADRATURE_STEP):
    """
    Midpoint-rule quadrature of int_0^inf M{xi >= r} dr - int_-inf^0 M{xi <= r} dr
    with the given step; an independent oracle for expected_value.
    """
    values = numpy.asarray(values, dtype=float)
    total = 0.0
    top = max(float(values.max()), 0.0)
    if top > 0:
        n_cells = int(numpy.ceil(top / step))
        r = (numpy.arange(n_cells) + 0.5) * (top / n_cells)
        events = values[None, :] >= r[:, None]
        total += float(numpy.sum(space.measure_of_masks(space.masks_from_bool(events)))) * (top / n_cells)
    bottom = min(float(values.min()), 0.0)
    if bottom < 0:
        n_cells = int(numpy.ceil(-bottom / step))
        r = bottom + (numpy.arange(n_cells) + 0.5) * (-bottom / n_cells)
        events = values[None, :] <= r[:, None]
        total -= float(numpy.sum(space.measure_of_masks(space.masks_from_bool(events)))) * (-bottom / n_cells)
    return total


def _finish(name, instances, excesses, tolerance, start):
    excesses = numpy.asarray(excesses, dtype=float)
    violations = int(numpy.count_nonzero(excesses > tolerance))
    worst = float(excesses.max()) if excesses.shape[0] > 0 else 0.0
    result = SuiteResult(name, instances, violations, worst, tolerance, time.time() - start)
    logger.info(repr(result))
    return result


def markov_suite(seed=DEFAULT_SEED, instances=1000):
    """
    M{|v| >= t} <= E[phi(|v|)] / phi(t) for phi in identity, x^2 and expm1
    and t in (0, max |v|].
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    specs = [OrliczSpec.identity(), OrliczSpec.power(2.0), OrliczSpec.expm1()]
    excesses = []
    for _ in range(instances):
        space = random_space(rng)
        values = rng.normal(0.0, 2.0, space.n_atoms)
        spec = specs[int(rng.integers(0, len(specs)))]
        top = float(numpy.abs(values).max())
        t = top * (1.0 - rng.random())
        lhs, rhs = markov_check(space, values, spec, t)
        excesses.append((lhs - rhs) / max(1.0, abs(rhs)))
    return _finish("markov", instances, excesses, 1e-12, start)


def er_within_mr_suite(scenarios):
    """
    For every scenario, index n and eps of its grid:
    M{|nu_n - xi| >= eps} <= E[|nu_n - xi|] / eps.
    """
    start = time.time()
    excesses = []
    instances = 0
    for scenario in scenarios:
        config = scenario.diagnostic_config()
        seq = scenario.sequence(config.horizon)
        nu = transform_sequence(seq, scenario.weights)
        rdev = numpy.abs(nu - seq.limit.values[None, :])
        means = mean_gap_profile(seq.space, rdev)
        for eps in config.epsilon_grid:
            measures = measure_gap_profile(seq.space, rdev, eps)
            bound = means / eps
            excesses.append(numpy.max((measures - bound) / numpy.maximum(1.0, bound)))
            instances += measures.shape[0]
    return _finish("er_within_mr", instances, excesses, 1e-12, start)


def roundtrip_suite(seed=DEFAULT_SEED, sequences=100, length=1000):
    """
    Inverting the Riesz transform reproduces the sequence within 1e-9.
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    errors = []
    for _ in range(sequences):
        n_atoms = int(rng.integers(1, 5))
        terms = rng.normal(0.0, 1.0, (length, n_atoms))
        weights = WeightSequence.from_values(rng.uniform(0.1, 2.0, length))
        back = inverse_transform_sequence(transform_sequence(terms, weights), weights)
        errors.append(float(numpy.max(numpy.abs(back - terms))))
    return _finish("roundtrip", sequences, errors, 1e-9, start)


def row_stochastic_suite(seed=DEFAULT_SEED, sequences=100, max_row=1000):
    """
    Riesz rows n = 1..max_row sum to one within 1e-12.
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    errors = []
    for _ in range(sequences):
        weights = WeightSequence.from_values(rng.uniform(0.01, 10.0, max_row))
        worst = 0.0
        for n in range(1, max_row + 1):
            worst = max(worst, abs(float(numpy.sum(riesz_row(weights, n))) - 1.0))
        errors.append(worst)
    return _finish("row_stochastic", sequences, errors, 1e-12, start)


def expected_value_oracle_suite(seed=DEFAULT_SEED, instances=200, max_atoms=6):
    """
    Exact level-set expected values agree with the 1e-5 step quadrature
    oracle within 1e-4.
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    errors = []
    for _ in range(instances):
        space = random_space(rng, max_atoms=max_atoms)
        values = rng.uniform(-2.0, 2.0, space.n_atoms)
        errors.append(abs(expected_value(space, values) - quadrature_expected_value(space, values)))
    return _finish("expected_value_oracle", instances, errors, 1e-4, start)


def uniqueness_suite(seed=DEFAULT_SEED, instances=1000):
    """
    M{|xi - eta| >= eps} <= M{|nu - xi| >= eps/2} + M{|nu - eta| >= eps/2}.
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    excesses = []
    for _ in range(instances):
        space = random_space(rng)
        xi = rng.normal(0.0, 1.0, space.n_atoms)
        eta = xi + rng.normal(0.0, 0.5, space.n_atoms) * (rng.random(space.n_atoms) < 0.5)
        nu = xi + rng.normal(0.0, 0.5, space.n_atoms)
        eps = float(rng.uniform(0.01, 1.0))
        lhs, rhs = uniqueness_values(space, nu, xi, eta, eps)
        excesses.append(lhs - rhs)
    return _finish("uniqueness", instances, excesses, 1e-12, start)


def affine_suite(seed=DEFAULT_SEED, instances=500):
    """
    E[a xi + b] = a E[xi] + b for a > 0.
    """
    start = time.time()
    rng = numpy.random.default_rng(seed)
    errors = []
    for _ in range(instances):
        space = random_space(rng)
        values = rng.uniform(-3.0, 3.0, space.n_atoms)
        a = float(rng.uniform(0.1, 5.0))
        b = float(rng.uniform(-5.0, 5.0))
        errors.append(abs(expected_value(space, a * values + b) - (a * expected_value(space, values) + b)))
    return _finish("affine", instances, errors, 1e-12, start)


def run_all_suites(seed=DEFAULT_SEED, scenarios=None):
    """
    Run every suite; the e_R within m_R suite only when scenarios are given.
    :return: list of SuiteResult
    """
    results = [markov_suite(seed), roundtrip_suite(seed), row_stochastic_suite(seed),
               expected_value_oracle_suite(seed), uniqueness_suite(seed), affine_suite(seed)]
    if scenarios:
        results.append(er_within_mr_suite(scenarios))
    return results
