#!/usr/bin/env python
"""
RieszUncertain - finite-horizon gap profiles and EMPIRICAL membership
verdicts for the convergence classes of uncertain sequences and of their
Riesz transforms, together with the Markov-type bound, the Borel-Cantelli
budget, subsequence extraction, the moment-decay fit and the limit
uniqueness bound.
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
# Purpose:  Every "lim_{n->inf} gap_n = 0" statement is evaluated over a
#           tail window of a finite horizon and reported as pass, fail or
#           inconclusive.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import math
import time

import numpy

from rieszuncertain.rieszuncertaincore import distribution_profile
from rieszuncertain.rieszuncertaincore import expected_value
from rieszuncertain.rieszuncertaincore import expected_values_nonneg
from rieszuncertain.rieszuncertaincore import variable_values
from rieszuncertain.rieszuncertainorlicz import OrliczSpec
from rieszuncertain.rieszuncertainorlicz import orlicz_moment
from rieszuncertain.rieszuncertainorlicz import orlicz_p_gap_profile
from rieszuncertain.rieszuncertainsummability import check_regularity
from rieszuncertain.rieszuncertainsummability import tail_window_size
from rieszuncertain.rieszuncertainsummability import tauberian_condition_profile
from rieszuncertain.rieszuncertainsummability import transform_at
from rieszuncertain.rieszuncertainsummability import transform_sequence
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException

logger = logging.getLogger(__name__)

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_INCONCLUSIVE = "inconclusive"

GAP_KINDS = ["as", "measure", "mean", "dist"]

INEQUALITY_TOLERANCE = 1e-12


class DiagnosticConfig(object):
    """
    Grids, windows and thresholds turning limit statements into finite
    horizon verdicts.
    """

    def __init__(self, horizon, epsilon_grid=(0.1, 0.01, 0.001), lambda_grid=(0.5, 1.0), tail_fraction=0.1,
                 tolerance=1e-6, dist_grid=None, dist_offset=0.25, tauberian_threshold=0.25,
                 regularity_tolerance=1e-2):
        """
        :param horizon: maximum index N evaluated, >= 10.
        :param epsilon_grid: positive epsilons for m, m_R, u_R, m_tilde and so.
        :param lambda_grid: positive lambdas for so.
        :param tail_fraction: fraction in (0, 1] of evaluable indices forming the tail window.
        :param tolerance: a gap <= tolerance over the tail window passes.
        :param dist_grid: optional points for the distribution gaps; default from the limit.
        :param dist_offset: offset around limit values used by the default grid.
        :param tauberian_threshold: threshold of the n p_n / P_n profile.
        :param regularity_tolerance: threshold of the regularity check.
        """
        self.horizon = int(horizon)
        self.epsilon_grid = tuple(float(eps) for eps in epsilon_grid)
        self.lambda_grid = tuple(float(lam) for lam in lambda_grid)
        self.tail_fraction = float(tail_fraction)
        self.tolerance = float(tolerance)
        self.dist_grid = None if dist_grid is None else tuple(float(x) for x in dist_grid)
        self.dist_offset = float(dist_offset)
        self.tauberian_threshold = float(tauberian_threshold)
        self.regularity_tolerance = float(regularity_tolerance)

        if self.horizon < 10:
            raise RieszUncertainInputException("The diagnostic horizon must be at least 10 (got {}).".format(
                self.horizon))
        if len(self.epsilon_grid) == 0 or min(self.epsilon_grid) <= 0:
            raise RieszUncertainInputException("The epsilon grid must be nonempty and positive.")
        if len(self.lambda_grid) == 0 or min(self.lambda_grid) <= 0:
            raise RieszUncertainInputException("The lambda grid must be nonempty and positive.")
        if not (0.0 < self.tail_fraction <= 1.0):
            raise RieszUncertainInputException("tail_fraction must lie in (0, 1].")
        if not self.tolerance > 0:
            raise RieszUncertainInputException("The tolerance must be positive.")
        if (self.dist_grid is not None) and len(self.dist_grid) == 0:
            raise RieszUncertainInputException("An explicit distribution grid must be nonempty.")
        if not self.dist_offset > 0:
            raise RieszUncertainInputException("dist_offset must be positive.")

    def with_overrides(self, **kwargs):
        """
        A copy with every non-None keyword replacing the current value.
        """
        values = dict(horizon=self.horizon, epsilon_grid=self.epsilon_grid, lambda_grid=self.lambda_grid,
                      tail_fraction=self.tail_fraction, tolerance=self.tolerance, dist_grid=self.dist_grid,
                      dist_offset=self.dist_offset, tauberian_threshold=self.tauberian_threshold,
                      regularity_tolerance=self.regularity_tolerance)
        for key, val in kwargs.items():
            if key not in values:
                raise RieszUncertainInputException("Unknown diagnostic option '{}'.".format(key))
            if val is not None:
                values[key] = val
        return DiagnosticConfig(**values)

    def __repr__(self):
        return ("DiagnosticConfig(horizon={}, eps={}, lambda={}, tail_fraction={}, tolerance={})"
                .format(self.horizon, self.epsilon_grid, self.lambda_grid, self.tail_fraction, self.tolerance))


def format_param_value(value):
    return "{:g}".format(value)


class GapProfile(object):
    """
    The gap values of one class for one parameter choice over the evaluable
    indices (n for most classes, m for the union-tail classes).
    """

    def __init__(self, class_label, parameter, indices, values):
        """
        :param class_label: e.g. 'f_R'.
        :param parameter: tuple of (name, value) pairs, () when unparameterised.
        :param indices: evaluable indices.
        :param values: nonnegative gaps aligned with indices.
        """
        self.class_label = class_label
        self.parameter = tuple(parameter)
        self.indices = numpy.asarray(indices, dtype=numpy.int64)
        self.values = numpy.asarray(values, dtype=float)
        self.verdict = None
        self.tail_max = float("nan")
        self.tail_min = float("nan")

    @property
    def param_str(self):
        if len(self.parameter) == 0:
            return "-"
        return ";".join("{}={}".format(name, format_param_value(val)) for name, val in self.parameter)

    @property
    def param_key(self):
        return tuple(val for _, val in self.parameter)

    def evaluate(self, tolerance, tail_fraction):
        """
        pass iff the tail max is <= tolerance, fail iff the tail min is
        > 10 * tolerance, inconclusive otherwise (and for empty profiles).
        """
        if self.values.shape[0] == 0:
            self.verdict = VERDICT_INCONCLUSIVE
            return self.verdict
        size = tail_window_size(self.values.shape[0], tail_fraction)
        tail = self.values[-size:]
        self.tail_max = float(tail.max())
        self.tail_min = float(tail.min())
        if self.tail_max <= tolerance:
            self.verdict = VERDICT_PASS
        elif self.tail_min > 10.0 * tolerance:
            self.verdict = VERDICT_FAIL
        else:
            self.verdict = VERDICT_INCONCLUSIVE
        return self.verdict

    def value_at(self, index):
        pos = numpy.nonzero(self.indices == index)[0]
        if pos.shape[0] == 0:
            raise RieszUncertainInputException("Index {} is not evaluable for {} {}.".format(
                index, self.class_label, self.param_str))
        return float(self.values[pos[0]])

    def __repr__(self):
        return "GapProfile({}, {}, tail_max={}, verdict={})".format(self.class_label, self.param_str,
                                                                    self.tail_max, self.verdict)


def combine_verdicts(verdicts):
    verdicts = list(verdicts)
    if len(verdicts) == 0:
        return VERDICT_INCONCLUSIVE
    if any(v == VERDICT_FAIL for v in verdicts):
        return VERDICT_FAIL
    if all(v == VERDICT_PASS for v in verdicts):
        return VERDICT_PASS
    return VERDICT_INCONCLUSIVE


class ClassReport(object):
    """
    The EMPIRICAL verdicts of one sequence under one weight sequence: one
    profile per class and parameter, a verdict per class, and the two weight
    conditions (regularity and Tauberian).
    """

    def __init__(self, name, profiles, config, regularity, tauberian):
        self.name = name
        self.profiles = list(profiles)
        self.config = config
        self.regularity = regularity
        self.tauberian = tauberian
        self.class_verdicts = dict()
        labels = []
        for profile in self.profiles:
            if profile.class_label not in labels:
                labels.append(profile.class_label)
        for label in labels:
            self.class_verdicts[label] = combine_verdicts(profile.verdict for profile in self.profiles
                                                          if profile.class_label == label)

    @property
    def class_labels(self):
        return sorted(self.class_verdicts.keys())

    def verdict(self, class_label):
        if class_label not in self.class_verdicts:
            raise RieszUncertainInputException("Class '{}' was not evaluated.".format(class_label))
        return self.class_verdicts[class_label]

    def profiles_for(self, class_label):
        return [profile for profile in self.profiles if profile.class_label == class_label]

    def get_profile(self, class_label, **params):
        for profile in self.profiles_for(class_label):
            if dict(profile.parameter) == dict((key, float(val)) for key, val in params.items()):
                return profile
        raise RieszUncertainInputException("No profile {} {}.".format(class_label, params))

    def rows(self):
        """
        (class, param, tail-max gap, verdict) per profile, sorted by class
        name then ascending parameter tuple, followed by the weight rows.
        """
        ordered = sorted(self.profiles, key=lambda prof: (prof.class_label, prof.param_key))
        out_rows = [(prof.class_label, prof.param_str, prof.tail_max, prof.verdict) for prof in ordered]
        out_rows.append(("regularity", "-", self.regularity.column_ratio,
                         "holds" if self.regularity.regular else "fails"))
        out_rows.append(("tauberian", "-", self.tauberian.tail_max,
                         "holds" if self.tauberian.holds else "fails"))
        return out_rows


# ---------------------------------------------------------------------------
# Vectorised gap profiles over (K x m) arrays
# ---------------------------------------------------------------------------

def as_gap_profile(space, deviations):
    """max over Lambda of |xi_n - xi| for each row."""
    return deviations[:, space.almost_sure_columns].max(axis=1)


def measure_gap_profile(space, deviations, eps):
    """M{|xi_n - xi| >= eps} for each row."""
    return space.measure_of_masks(space.masks_from_bool(deviations >= eps))


def mean_gap_profile(space, deviations):
    """E[|xi_n - xi|] for each row."""
    return expected_values_nonneg(space, deviations)


def effective_dist_grid(limit_values, dist_grid=None, dist_offset=0.25):
    """
    The continuity points used for distribution gaps. Without an explicit
    grid: v - offset and v + offset for every distinct limit value v, plus
    midpoints between consecutive distinct values. Points equal to a value of
    the limit (jump locations of its distribution) are dropped.
    """
    levels = numpy.unique(numpy.asarray(limit_values, dtype=float))
    if dist_grid is None:
        points = list(levels - dist_offset) + list(levels + dist_offset)
        points += list((levels[1:] + levels[:-1]) / 2.0)
    else:
        points = list(dist_grid)
    grid = numpy.unique(numpy.asarray(points, dtype=float))
    grid = grid[~numpy.isin(grid, levels)]
    if grid.shape[0] == 0:
        raise RieszUncertainInputException("The distribution grid has no continuity point of the limit.")
    return grid


def dist_gap_profile(space, terms, limit_values, x_grid):
    """max over the grid of |Phi_n(x) - Phi(x)| for each row of terms."""
    phi_n = distribution_profile(space, terms, x_grid)
    phi = distribution_profile(space, numpy.asarray(limit_values, dtype=float)[None, :], x_grid)
    return numpy.abs(phi_n - phi).max(axis=1)


def slow_osc_window_ends(horizon, lam):
    n_idx = numpy.arange(1, horizon + 1, dtype=numpy.int64)
    ends = numpy.floor((1.0 + lam) * n_idx + 1e-9).astype(numpy.int64)
    return n_idx, ends


def slow_osc_profiles(space, terms, lam, eps_grid):
    """
    M(max_{n <= k <= floor((1+lam) n)} |xi_k - xi_n| >= eps) for every n whose
    window fits in the horizon.

    :return: (indices, dict eps -> values)
    """
    horizon = terms.shape[0]
    n_idx, ends = slow_osc_window_ends(horizon, lam)
    evaluable = n_idx[ends <= horizon]
    swings = numpy.empty((evaluable.shape[0], terms.shape[1]), dtype=float)
    for pos, n in enumerate(evaluable):
        window = terms[n - 1:ends[n - 1]]
        swings[pos] = numpy.maximum(window.max(axis=0) - terms[n - 1], terms[n - 1] - window.min(axis=0))
    out = dict()
    for eps in eps_grid:
        out[eps] = space.measure_of_masks(space.masks_from_bool(swings >= eps))
    return evaluable, out


def uniform_tail_profile(space, deviations, eps):
    """
    M(union_{n=m..N} {|xi_n - xi| >= eps}) for m = 1..N, from the reverse
    running union of the event bitmasks.
    """
    masks = space.masks_from_bool(deviations >= eps)
    unions = numpy.bitwise_or.accumulate(masks[::-1])[::-1]
    return space.measure_of_masks(unions)


# ---------------------------------------------------------------------------
# Single-index gaps
# ---------------------------------------------------------------------------

def _deviation(seq, n):
    return numpy.abs(seq.term_at(n).values - seq.limit.values)[None, :]


def as_gap(seq, n):
    return float(as_gap_profile(seq.space, _deviation(seq, n))[0])


def measure_gap(seq, n, eps):
    if not eps > 0:
        raise RieszUncertainInputException("eps must be positive.")
    return float(measure_gap_profile(seq.space, _deviation(seq, n), eps)[0])


def mean_gap(seq, n):
    return float(mean_gap_profile(seq.space, _deviation(seq, n))[0])


def dist_gap(seq, n, x_grid=None, dist_offset=0.25):
    grid = effective_dist_grid(seq.limit.values, x_grid, dist_offset)
    term = seq.term_at(n).values[None, :]
    return float(dist_gap_profile(seq.space, term, seq.limit.values, grid)[0])


def riesz_gap(kind, seq, weights, n, params=None):
    """
    The gap of the given kind evaluated on nu_n instead of xi_n.

    :param kind: one of 'as', 'measure', 'mean', 'dist'.
    :param params: dict with 'eps' (measure), 'x_grid' (dist) and an
                   optional 'orlicz' OrliczSpec applied inside the gap.
    """
    if kind not in GAP_KINDS:
        raise RieszUncertainInputException("Unknown gap kind '{}'; expected one of {}.".format(kind, GAP_KINDS))
    params = dict(params) if params is not None else dict()
    space = seq.space
    nu = transform_at(seq, weights, n).values
    if kind == "dist":
        grid = effective_dist_grid(seq.limit.values, params.get("x_grid"), params.get("dist_offset", 0.25))
        return float(dist_gap_profile(space, nu[None, :], seq.limit.values, grid)[0])

    dev = numpy.abs(nu - seq.limit.values)[None, :]
    orlicz = params.get("orlicz")
    if (orlicz is not None) and (not orlicz.is_identity):
        dev = numpy.asarray(orlicz(dev), dtype=float)
    if kind == "as":
        return float(as_gap_profile(space, dev)[0])
    elif kind == "measure":
        if "eps" not in params or not params["eps"] > 0:
            raise RieszUncertainInputException("The measure gap needs a positive 'eps'.")
        return float(measure_gap_profile(space, dev, params["eps"])[0])
    return float(mean_gap_profile(space, dev)[0])


def slow_osc_gap(seq, n, lam, eps):
    """
    M(max_{n <= k <= floor((1+lam) n)} |xi_k - xi_n| >= eps), or None when
    the window reaches beyond the horizon (no value can be given).
    """
    if not (lam > 0 and eps > 0):
        raise RieszUncertainInputException("lambda and eps must be positive.")
    n = seq.check_index(n)
    end = int(math.floor((1.0 + lam) * n + 1e-9))
    if end > seq.horizon:
        return None
    terms = seq.as_array()
    window = terms[n - 1:end]
    swing = numpy.maximum(window.max(axis=0) - terms[n - 1], terms[n - 1] - window.min(axis=0))
    return seq.space.measure_of_mask(seq.space.masks_from_bool(swing >= eps))


def markov_check(space, var, spec, t):
    """
    The Markov-type bound M{|var| >= t} <= E[phi(|var|)] / phi(t).

    :return: (lhs, rhs)
    """
    if not t > 0:
        raise RieszUncertainInputException("t must be positive.")
    phi_t = float(spec(numpy.array([float(t)]))[0])
    if not phi_t > 0:
        raise RieszUncertainInputException("phi({}) = {}; the bound needs phi(t) > 0.".format(t, phi_t))
    vals = numpy.abs(variable_values(space, var))
    lhs = space.measure_of_mask(space.masks_from_bool(vals >= t))
    rhs = orlicz_moment(space, vals, spec) / phi_t
    return lhs, rhs


class BorelCantelliBudget(object):

    def __init__(self, partial_sums, summable, tail_increment, tolerance):
        self.partial_sums = partial_sums
        self.summable = bool(summable)
        self.tail_increment = tail_increment
        self.tolerance = tolerance

    @property
    def verdict(self):
        return "SUMMABLE-TREND" if self.summable else "NOT-SUMMABLE"

    @property
    def total(self):
        return float(self.partial_sums[-1])

    def __repr__(self):
        return "BorelCantelliBudget({}, total={:.6g}, tail_increment={:.3g})".format(
            self.verdict, self.total, self.tail_increment)


def borel_cantelli_budget(event_measures, tolerance=1e-6, tail_fraction=0.1):
    """
    Running sums of M(E_n). SUMMABLE-TREND when the partial sums moved by at
    most tolerance over the tail window, i.e. the series has settled.

    :param event_measures: sequence of reals in [0, 1].
    :return: BorelCantelliBudget
    """
    measures = numpy.asarray(event_measures, dtype=float)
    if measures.ndim != 1 or measures.shape[0] == 0:
        raise RieszUncertainInputException("borel_cantelli_budget needs a nonempty sequence of measures.")
    if numpy.any(measures < 0) or numpy.any(measures > 1):
        raise RieszUncertainInputException("Event measures must lie in [0, 1].")
    partial = numpy.cumsum(measures)
    size = tail_window_size(measures.shape[0], tail_fraction)
    tail_increment = float(numpy.sum(measures[-size:]))
    return BorelCantelliBudget(partial, tail_increment <= tolerance, tail_increment, tolerance)


def _riesz_or_raw(seq, weights):
    terms = seq.as_array()
    if weights is None:
        return terms
    return transform_sequence(terms, weights)


def uniform_tail_gap(seq, weights, m, eps):
    """
    M(union_{n=m..N} {|nu_n - xi| >= eps}); with weights=None the raw terms
    are used in place of nu_n.
    """
    m = seq.check_index(m)
    if not eps > 0:
        raise RieszUncertainInputException("eps must be positive.")
    dev = numpy.abs(_riesz_or_raw(seq, weights)[m - 1:] - seq.limit.values[None, :])
    masks = seq.space.masks_from_bool(dev >= eps)
    return seq.space.measure_of_mask(numpy.bitwise_or.reduce(masks))


class SubsequenceExtraction(object):

    def __init__(self, indices, exhausted):
        self.indices = list(indices)
        self.exhausted = bool(exhausted)

    def __repr__(self):
        return "SubsequenceExtraction(found={}, exhausted={})".format(len(self.indices), self.exhausted)


def extract_uas_subsequence(seq, weights, config=None):
    """
    Greedily pick n'_1 < n'_2 < ... with M{|nu_{n'_k} - xi| >= 1/k} <= 2^-k,
    scanning up to the horizon. The extraction is exhausted when no index
    after the last selected one (or none at all) satisfies the next bound.

    :return: SubsequenceExtraction
    """
    horizon = seq.horizon if config is None else min(config.horizon, seq.horizon)
    dev = numpy.abs(_riesz_or_raw(seq, weights)[:horizon] - seq.limit.values[None, :])
    space = seq.space
    indices = []
    k = 1
    for n in range(1, horizon + 1):
        gap = space.measure_of_mask(space.masks_from_bool(dev[n - 1] >= 1.0 / k))
        if gap <= math.ldexp(1.0, -k):
            indices.append(n)
            k += 1
    exhausted = (len(indices) == 0) or (indices[-1] < horizon)
    logger.debug("Extracted {} indices from '{}' (exhausted={}).".format(len(indices), seq.name, exhausted))
    return SubsequenceExtraction(indices, exhausted)


class MomentDecayFit(object):

    def __init__(self, delta_hat, c_hat, residual, used_indices):
        self.delta_hat = delta_hat
        self.c_hat = c_hat
        self.residual = residual
        self.used_indices = list(used_indices)
        self.label = "EMPIRICAL"

    @property
    def decaying(self):
        return self.delta_hat > 0

    def __repr__(self):
        return "MomentDecayFit(delta={:.6g}, C={:.6g}, residual={:.3g})".format(self.delta_hat, self.c_hat,
                                                                               self.residual)


def moment_decay_fit(seq, weights, p, sample_indices):
    """
    Least squares fit of log E[|nu_n - xi|^p] against log n over the sample
    indices with a nonzero moment; moment ~ C n^-(1+delta). All moments zero
    gives delta = +inf.

    :return: MomentDecayFit
    """
    if not p > 1:
        raise RieszUncertainInputException("The moment exponent p must exceed 1.")
    idx = numpy.asarray(sample_indices, dtype=numpy.int64)
    if idx.ndim != 1 or idx.shape[0] < 8:
        raise RieszUncertainInputException("moment_decay_fit needs at least 8 sample indices.")
    if numpy.any(numpy.diff(idx) <= 0):
        raise RieszUncertainInputException("Sample indices must be strictly increasing.")
    if idx[0] < 1 or idx[-1] > seq.horizon:
        raise RieszUncertainInputException("Sample indices must lie within 1..{}.".format(seq.horizon))
    dev = numpy.abs(_riesz_or_raw(seq, weights)[idx - 1] - seq.limit.values[None, :])
    moments = expected_values_nonneg(seq.space, numpy.power(dev, p))
    positive = moments > 0
    if not numpy.any(positive):
        return MomentDecayFit(math.inf, 0.0, 0.0, [])
    if numpy.count_nonzero(positive) < 2:
        raise RieszUncertainInputException("At least two nonzero moments are needed for the fit.")
    log_n = numpy.log(idx[positive].astype(float))
    log_m = numpy.log(moments[positive])
    slope, intercept = numpy.polyfit(log_n, log_m, 1)
    residual = float(numpy.max(numpy.abs(log_m - (slope * log_n + intercept))))
    return MomentDecayFit(float(-slope - 1.0), float(math.exp(intercept)), residual, idx[positive].tolist())


def uniqueness_values(space, nu, xi, eta, eps):
    """
    lhs = M{|xi - eta| >= eps}, rhs = M{|nu - xi| >= eps/2} + M{|nu - eta| >= eps/2}.
    """
    if not eps > 0:
        raise RieszUncertainInputException("eps must be positive.")
    nu = variable_values(space, nu)
    xi = variable_values(space, xi)
    eta = variable_values(space, eta)
    lhs = space.measure_of_mask(space.masks_from_bool(numpy.abs(xi - eta) >= eps))
    rhs = (space.measure_of_mask(space.masks_from_bool(numpy.abs(nu - xi) >= eps / 2.0))
           + space.measure_of_mask(space.masks_from_bool(numpy.abs(nu - eta) >= eps / 2.0)))
    return lhs, rhs


def uniqueness_bound(space, seq, weights, n, xi, eta, eps):
    """
    The sub-additivity split bounding M{|xi - eta| >= eps} by the two
    eps/2 deviations of the Riesz transform nu_n.

    :return: (lhs, rhs)
    """
    nu = transform_at(seq, weights, n)
    return uniqueness_values(space, nu.values, xi, eta, eps)


def classify(seq, weights, orlicz=None, config=None, name=None):
    """
    Evaluate every gap profile of the sequence and of its Riesz transform and
    issue EMPIRICAL verdicts.

    :param seq: UncertainSequence
    :param weights: WeightSequence
    :param orlicz: OrliczSpec (default identity, p = 1).
    :param config: DiagnosticConfig (default: sequence horizon, default grids).
    :param name: label for the report.
    :return: ClassReport
    """
    start = time.time()
    if orlicz is None:
        orlicz = OrliczSpec.identity()
    if config is None:
        config = DiagnosticConfig(seq.horizon)
    if config.horizon > seq.horizon:
        raise RieszUncertainInputException("The diagnostic horizon {} exceeds the sequence horizon {}.".format(
            config.horizon, seq.horizon))
    name = name if name is not None else seq.name
    space = seq.space
    horizon = config.horizon
    terms = seq.as_array()[:horizon]
    limit = seq.limit.values
    nu = transform_sequence(terms, weights)
    dev = numpy.abs(terms - limit[None, :])
    rdev = numpy.abs(nu - limit[None, :])
    idx = numpy.arange(1, horizon + 1)
    grid = effective_dist_grid(limit, config.dist_grid, config.dist_offset)

    profiles = list()
    profiles.append(GapProfile("f", (), idx, as_gap_profile(space, dev)))
    profiles.append(GapProfile("f_R", (), idx, as_gap_profile(space, rdev)))
    profiles.append(GapProfile("e", (), idx, mean_gap_profile(space, dev)))
    profiles.append(GapProfile("e_R", (), idx, mean_gap_profile(space, rdev)))
    profiles.append(GapProfile("d", (), idx, dist_gap_profile(space, terms, limit, grid)))
    profiles.append(GapProfile("d_R", (), idx, dist_gap_profile(space, nu, limit, grid)))
    profiles.append(GapProfile("dp_R", (), idx, orlicz_p_gap_profile(space, rdev, orlicz)))
    for eps in config.epsilon_grid:
        param = (("eps", eps),)
        profiles.append(GapProfile("m", param, idx, measure_gap_profile(space, dev, eps)))
        profiles.append(GapProfile("m_R", param, idx, measure_gap_profile(space, rdev, eps)))
        profiles.append(GapProfile("m_tilde", param, idx, uniform_tail_profile(space, dev, eps)))
        profiles.append(GapProfile("u_R", param, idx, uniform_tail_profile(space, rdev, eps)))
    for lam in config.lambda_grid:
        so_idx, so_vals = slow_osc_profiles(space, terms, lam, config.epsilon_grid)
        for eps in config.epsilon_grid:
            profiles.append(GapProfile("so", (("lambda", lam), ("eps", eps)), so_idx, so_vals[eps]))
    if not orlicz.is_identity:
        phi_dev = numpy.asarray(orlicz(rdev), dtype=float)
        profiles.append(GapProfile("f_R^phi", (), idx, as_gap_profile(space, phi_dev)))
        profiles.append(GapProfile("e_R^phi", (), idx, mean_gap_profile(space, phi_dev)))
        for eps in config.epsilon_grid:
            profiles.append(GapProfile("m_R^phi", (("eps", eps),), idx, measure_gap_profile(space, phi_dev, eps)))

    for profile in profiles:
        profile.evaluate(config.tolerance, config.tail_fraction)

    regularity = check_regularity(weights, horizon, config.regularity_tolerance)
    tauberian = tauberian_condition_profile(weights, horizon, config.tauberian_threshold, config.tail_fraction)
    report = ClassReport(name, profiles, config, regularity, tauberian)
    logger.info("Classified '{}' over {} indices in {:.3f} s.".format(name, horizon, time.time() - start))
    return report


def arrow_violations(report, arrows):
    """
    The arrows (a, b) with a passing and b failing in the report;
    inconclusive verdicts never violate.
    """
    out = []
    for left, right in arrows:
        if (left in report.class_verdicts) and (right in report.class_verdicts):
            if report.verdict(left) == VERDICT_PASS and report.verdict(right) == VERDICT_FAIL:
                out.append((left, right))
    return out
