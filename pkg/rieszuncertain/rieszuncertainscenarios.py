#!/usr/bin/env python
"""
RieszUncertain - scenarios: built-in sequence families, the oscillating
counterexample separating f from f_R, scenario files, the inclusion table
over a corpus of scenarios and the Tauberian evidence bundle.
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
# Purpose:  Scenario construction and corpus level checks.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import glob
import logging
import math
import os

import numpy

from rieszuncertain import RIESZUNCERTAIN_INCLUSION_ARROWS
from rieszuncertain.rieszuncertaincore import UncertainSequence
from rieszuncertain.rieszuncertaincore import UncertaintySpace
from rieszuncertain.rieszuncertainconvergence import DiagnosticConfig
from rieszuncertain.rieszuncertainconvergence import VERDICT_PASS
from rieszuncertain.rieszuncertainconvergence import arrow_violations
from rieszuncertain.rieszuncertainconvergence import borel_cantelli_budget
from rieszuncertain.rieszuncertainconvergence import classify
from rieszuncertain.rieszuncertainorlicz import ORLICZ_KINDS
from rieszuncertain.rieszuncertainorlicz import OrliczSpec
from rieszuncertain.rieszuncertainsummability import WEIGHT_KINDS
from rieszuncertain.rieszuncertainsummability import WeightSequence
from rieszuncertain.rieszuncertainsummability import inverse_transform_sequence
from rieszuncertain.rieszuncertainsummability import transform_at
from rieszuncertain.rieszuncertainsummability import transform_sequence
from rieszuncertain.rieszuncertainutils import RZUJSONParseHelper
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainutils import RieszUncertainParseException

logger = logging.getLogger(__name__)

FAMILY_KINDS = ["constant", "decay", "oscillating", "block_oscillating", "spike", "preimage", "atomwise_mixed"]
SINGLE_ATOM_FAMILIES = ["constant", "decay", "oscillating", "block_oscillating", "spike"]
SPACE_KINDS = ["additive", "possibility", "explicit"]
VERDICT_VALUES = ["pass", "fail", "inconclusive"]
GOLDEN_TOLERANCE = 1e-12

DIAGNOSTIC_KEYS = {"horizon": "horizon", "tolerance": "tolerance", "eps": "epsilon_grid",
                   "lambda": "lambda_grid", "tail_fraction": "tail_fraction", "dist_grid": "dist_grid",
                   "dist_offset": "dist_offset", "tauberian_threshold": "tauberian_threshold",
                   "regularity_tolerance": "regularity_tolerance"}


def _family_default_limit(kind, params):
    if kind == "constant":
        return float(params.get("value", 0.0))
    elif kind == "oscillating":
        return (float(params.get("high", 1.0)) + float(params.get("low", 0.0))) / 2.0
    return 0.0


def _family_column(kind, params, limit_value, n_idx):
    """
    Values of a family on one atom whose limit candidate is limit_value.
    """
    if kind == "constant":
        return numpy.full(n_idx.shape[0], float(params.get("value", limit_value)))
    elif kind == "decay":
        c = float(params.get("c", 1.0))
        alpha = float(params.get("alpha", 1.0))
        return limit_value + c / numpy.power(n_idx, alpha)
    elif kind == "oscillating":
        high = float(params.get("high", 1.0))
        low = float(params.get("low", 0.0))
        return numpy.where(n_idx.astype(numpy.int64) % 2 == 1, high, low)
    elif kind == "block_oscillating":
        # amplitude scale * 2^-j on the dyadic block (2^(j-1), 2^j]
        scale = float(params.get("scale", 1.0))
        block = numpy.frexp(n_idx - 1.0)[1]
        sign = numpy.where(n_idx.astype(numpy.int64) % 2 == 0, 1.0, -1.0)
        return limit_value + scale * numpy.ldexp(1.0, -block) * sign
    elif kind == "spike":
        out = numpy.full(n_idx.shape[0], float(limit_value))
        out[0] += float(params.get("c", 1.0))
        return out
    raise RieszUncertainInputException("'{}' cannot be used as a single atom family.".format(kind))


def builtin_family(kind, params, space, horizon, limit=None, weights=None, name=None):
    """
    Build a horizon-bounded uncertain sequence from a named family.

    kind               terms xi_n (per atom, with limit candidate xi)
    constant           value (default: the limit)
    decay              xi + c / n^alpha
    oscillating        high for odd n, low for even n; xi defaults to the midpoint
    block_oscillating  xi + scale 2^-j (-1)^n for n in (2^(j-1), 2^j]
    spike              xi + c at n = 1, xi afterwards
    preimage           the sequence whose Riesz transform under `weights` is xi + c / n^alpha
    atomwise_mixed     params['atoms'] lists one {family, params} per atom

    :param limit: scalar or per-atom limit candidate; None uses the family default.
    :return: UncertainSequence
    """
    if kind not in FAMILY_KINDS:
        raise RieszUncertainInputException("Unknown sequence family '{}'; expected one of {}.".format(
            kind, FAMILY_KINDS))
    params = dict(params) if params is not None else dict()
    horizon = int(horizon)
    if horizon < 1:
        raise RieszUncertainInputException("The horizon must be at least 1.")
    n_idx = numpy.arange(1, horizon + 1, dtype=float)
    n_atoms = space.n_atoms

    if kind == "atomwise_mixed":
        atom_specs = params.get("atoms")
        if (not isinstance(atom_specs, list)) or len(atom_specs) != n_atoms:
            raise RieszUncertainInputException("atomwise_mixed needs one family per atom ({}).".format(n_atoms))
        for atom_spec in atom_specs:
            if (not isinstance(atom_spec, dict)) or atom_spec.get("family") not in SINGLE_ATOM_FAMILIES:
                raise RieszUncertainInputException("atomwise_mixed atoms must use one of {}.".format(
                    SINGLE_ATOM_FAMILIES))
        if limit is None:
            limit_vec = numpy.array([_family_default_limit(spec["family"], spec.get("params", {}))
                                     for spec in atom_specs])
        else:
            limit_vec = numpy.broadcast_to(numpy.asarray(limit, dtype=float), (n_atoms,)).copy()
        values = numpy.empty((horizon, n_atoms), dtype=float)
        for i, atom_spec in enumerate(atom_specs):
            values[:, i] = _family_column(atom_spec["family"], atom_spec.get("params", {}), limit_vec[i], n_idx)
    else:
        if limit is None:
            limit = _family_default_limit(kind, params)
        limit_vec = numpy.broadcast_to(numpy.asarray(limit, dtype=float), (n_atoms,)).copy()
        values = numpy.empty((horizon, n_atoms), dtype=float)
        if kind == "preimage":
            if weights is None:
                raise RieszUncertainInputException("The preimage family needs the weight sequence.")
            c = float(params.get("c", 1.0))
            alpha = float(params.get("alpha", 1.0))
            target = limit_vec[None, :] + c / numpy.power(n_idx, alpha)[:, None]
            values[:, :] = inverse_transform_sequence(target, weights)
        else:
            for i in range(n_atoms):
                values[:, i] = _family_column(kind, params, limit_vec[i], n_idx)
    return UncertainSequence(space, limit_vec, horizon, values=values, name=name if name is not None else kind)


class Scenario(object):
    """
    A space, a sequence family with its limit candidate, weights, an Orlicz
    specification, per-scenario diagnostic options and optional golden data.
    """

    def __init__(self, name, space, family, family_params, limit, horizon, weights, orlicz=None,
                 description="", diagnostics=None, golden=None, source_path=None):
        self.name = name
        self.space = space
        self.family = family
        self.family_params = dict(family_params) if family_params is not None else dict()
        self.limit = limit
        self.horizon = int(horizon)
        self.weights = weights
        self.orlicz = orlicz if orlicz is not None else OrliczSpec.identity()
        self.description = description
        self.diagnostics = dict(diagnostics) if diagnostics is not None else dict()
        self.golden = dict(golden) if golden is not None else dict()
        self.source_path = source_path
        self._sequences = dict()

    def sequence(self, horizon=None):
        horizon = self.horizon if horizon is None else int(horizon)
        if horizon not in self._sequences:
            self._sequences[horizon] = builtin_family(self.family, self.family_params, self.space, horizon,
                                                      limit=self.limit, weights=self.weights, name=self.name)
        return self._sequences[horizon]

    def diagnostic_config(self, **overrides):
        """
        The scenario's DiagnosticConfig with non-None overrides applied
        (keys as DiagnosticConfig arguments).
        """
        values = dict()
        for key, val in self.diagnostics.items():
            values[DIAGNOSTIC_KEYS[key]] = val
        values["horizon"] = self.horizon
        config = DiagnosticConfig(**values)
        return config.with_overrides(**overrides)

    def classify(self, **overrides):
        config = self.diagnostic_config(**overrides)
        return classify(self.sequence(config.horizon), self.weights, self.orlicz, config, name=self.name)

    def golden_mismatches(self, report):
        """
        Descriptions of every golden verdict or transform value the report
        and the transform disagree with.
        """
        out = []
        for class_label, expected in sorted(self.golden.get("verdicts", dict()).items()):
            if class_label not in report.class_verdicts:
                out.append("golden class '{}' was not evaluated".format(class_label))
            elif report.verdict(class_label) != expected:
                out.append("golden verdict {}={} but classified {}".format(class_label, expected,
                                                                           report.verdict(class_label)))
        seq = self.sequence(report.config.horizon)
        for entry in self.golden.get("transform", list()):
            n = int(entry["n"])
            if n > seq.horizon:
                continue
            got = transform_at(seq, self.weights, n).values
            expected = numpy.broadcast_to(numpy.asarray(entry["values"], dtype=float), got.shape)
            if numpy.max(numpy.abs(got - expected)) > GOLDEN_TOLERANCE:
                out.append("golden transform nu_{}={} but computed {}".format(n, expected.tolist(), got.tolist()))
        return out

    def __repr__(self):
        return "Scenario(name={}, family={}, horizon={})".format(self.name, self.family, self.horizon)


def oscillating_counterexample(horizon=1000):
    """
    One atom with M({g1}) = 1, xi_n = 1 for odd n and 0 for even n, limit
    candidate 1/2 and weights p_k = 1: Riesz convergent almost surely but not
    almost surely convergent. nu_n = 1/2 + 1/(2n) for odd n and 1/2 for even n.
    """
    space = UncertaintySpace.from_additive(["g1"], [1.0])
    golden = {"verdicts": {"f": "fail", "f_R": "pass"},
              "transform": [{"n": 5, "values": [0.6]}, {"n": 6, "values": [0.5]}]}
    return Scenario("oscillating_counterexample", space, "oscillating", {"high": 1.0, "low": 0.0}, 0.5, horizon,
                    WeightSequence("constant"), OrliczSpec.identity(),
                    description="Alternating 1, 0 sequence: in f_R but not in f.",
                    diagnostics={"tolerance": 1e-3}, golden=golden)


def _parse_numeric_params(helper, data, tree_sequence, list_keys=()):
    """
    A params object whose values are numbers (or numeric lists for list_keys).
    """
    params = dict()
    if not helper.doesPathExist(data, tree_sequence):
        return params
    for key in helper.getDictValue(data, tree_sequence).keys():
        if key in list_keys:
            params[key] = helper.getNumericListValue(data, tree_sequence + [key])
        else:
            params[key] = helper.getNumericValue(data, tree_sequence + [key])
    return params


def _check_table_complete(atoms, entries):
    # the empty and full sets default to 0 and 1
    index = dict((atom, i) for i, atom in enumerate(atoms))
    full = (1 << len(atoms)) - 1
    masks = set()
    for subset, _ in entries:
        if any(str(atom) not in index for atom in subset):
            continue
        mask = 0
        for atom in subset:
            mask |= 1 << index[str(atom)]
        if 0 < mask < full:
            masks.add(mask)
    n_missing = max(full - 1, 0) - len(masks)
    if n_missing > 0:
        raise RieszUncertainParseException("The measure table is missing {} of the {} proper nonempty "
                                           "subsets.".format(n_missing, full - 1))


def _parse_space(helper, data):
    atoms = [str(atom) for atom in helper.getListValue(data, ["space", "atoms"])]
    kind = helper.getStrValue(data, ["space", "kind"], valid_values=SPACE_KINDS)
    almost_sure = None
    if helper.doesPathExist(data, ["space", "almost_sure"]):
        almost_sure = [str(atom) for atom in helper.getListValue(data, ["space", "almost_sure"])]
    if kind == "additive":
        weights = helper.getNumericListValue(data, ["space", "weights"])
        return UncertaintySpace.from_additive(atoms, weights, almost_sure=almost_sure)
    elif kind == "possibility":
        weights = helper.getNumericListValue(data, ["space", "weights"])
        dual = True
        if helper.doesPathExist(data, ["space", "dual"]):
            dual = helper.getBooleanValue(data, ["space", "dual"])
        return UncertaintySpace.from_possibility(atoms, weights, dual=dual, almost_sure=almost_sure)
    entries = []
    for entry in helper.getListValue(data, ["space", "table"]):
        subset = helper.getListValue(entry, ["subset"])
        entries.append((subset, helper.getNumericValue(entry, ["value"])))
    _check_table_complete(atoms, entries)
    return UncertaintySpace.from_table(atoms, entries, almost_sure=almost_sure)


def _parse_weights(helper, data):
    kind = helper.getStrValue(data, ["weights", "kind"], valid_values=WEIGHT_KINDS)
    if kind == "explicit":
        return WeightSequence(kind, {"values": helper.getNumericListValue(data, ["weights", "params", "values"])})
    return WeightSequence(kind, _parse_numeric_params(helper, data, ["weights", "params"]))


def _parse_family_params(helper, data, family):
    if family != "atomwise_mixed":
        return _parse_numeric_params(helper, data, ["sequence", "params"])
    atom_specs = []
    for atom_spec in helper.getListValue(data, ["sequence", "params", "atoms"]):
        atom_specs.append({"family": helper.getStrValue(atom_spec, ["family"], valid_values=SINGLE_ATOM_FAMILIES),
                           "params": _parse_numeric_params(helper, atom_spec, ["params"])})
    return {"atoms": atom_specs}


def _parse_orlicz(helper, data):
    if not helper.doesPathExist(data, ["orlicz"]):
        return OrliczSpec.identity()
    phi = helper.getStrValue(data, ["orlicz", "phi"], valid_values=ORLICZ_KINDS)
    p = 1.0
    if helper.doesPathExist(data, ["orlicz", "p"]):
        p = helper.getNumericValue(data, ["orlicz", "p"])
    if phi == "identity":
        return OrliczSpec.identity(p=p)
    elif phi == "power":
        return OrliczSpec.power(helper.getNumericValue(data, ["orlicz", "exponent"]), p=p)
    elif phi == "expm1":
        return OrliczSpec.expm1(p=p)
    return OrliczSpec.table(helper.getNumericMatrixValue(data, ["orlicz", "breakpoints"], n_cols=2), p=p)


def _parse_diagnostics(helper, data):
    diagnostics = dict()
    if not helper.doesPathExist(data, ["diagnostics"]):
        return diagnostics
    for key in helper.getDictValue(data, ["diagnostics"]).keys():
        if key not in DIAGNOSTIC_KEYS:
            raise RieszUncertainParseException("Unknown diagnostics option '{}'.".format(key))
        if key in ("eps", "lambda", "dist_grid"):
            diagnostics[key] = helper.getNumericListValue(data, ["diagnostics", key])
        elif key == "horizon":
            diagnostics[key] = int(helper.getNumericValue(data, ["diagnostics", key], valid_lower=10))
        else:
            diagnostics[key] = helper.getNumericValue(data, ["diagnostics", key])
    return diagnostics


def _parse_golden(helper, data):
    golden = dict()
    if not helper.doesPathExist(data, ["golden"]):
        return golden
    if helper.doesPathExist(data, ["golden", "verdicts"]):
        verdicts = helper.getDictValue(data, ["golden", "verdicts"])
        for class_label in verdicts.keys():
            helper.getStrValue(verdicts, [class_label], valid_values=VERDICT_VALUES)
        golden["verdicts"] = dict(verdicts)
    if helper.doesPathExist(data, ["golden", "transform"]):
        entries = []
        for entry in helper.getListValue(data, ["golden", "transform"]):
            entries.append({"n": int(helper.getNumericValue(entry, ["n"], valid_lower=1)),
                            "values": helper.getNumericListValue(entry, ["values"])})
        golden["transform"] = entries
    return golden


def _build_scenario(helper, data, source_path):
    name = helper.getStrValue(data, ["name"])
    description = ""
    if helper.doesPathExist(data, ["description"]):
        description = helper.getStrValue(data, ["description"])
    space = _parse_space(helper, data)
    family = helper.getStrValue(data, ["sequence", "family"], valid_values=FAMILY_KINDS)
    family_params = _parse_family_params(helper, data, family)
    limit = None
    if helper.doesPathExist(data, ["sequence", "limit"]):
        if isinstance(data["sequence"]["limit"], list):
            limit = helper.getNumericListValue(data, ["sequence", "limit"])
        else:
            limit = helper.getNumericValue(data, ["sequence", "limit"])
    diagnostics = _parse_diagnostics(helper, data)
    if "horizon" in diagnostics:
        horizon = diagnostics.pop("horizon")
    else:
        horizon = int(helper.getNumericValue(data, ["sequence", "horizon"], valid_lower=10))
    weights = _parse_weights(helper, data)
    orlicz = _parse_orlicz(helper, data)
    golden = _parse_golden(helper, data)
    return Scenario(name, space, family, family_params, limit, horizon, weights, orlicz, description=description,
                    diagnostics=diagnostics, golden=golden, source_path=source_path)


def parse_scenario_dict(data, source_path=None):
    """
    Build a Scenario from a parsed scenario document.
    Structural problems (missing keys, wrong types, incomplete measure
    tables) raise RieszUncertainParseException; invalid content (e.g.,
    negative weights) raises RieszUncertainInputException.
    """
    helper = RZUJSONParseHelper()
    if not isinstance(data, dict):
        raise RieszUncertainParseException("A scenario file must hold a JSON object.")
    try:
        return _build_scenario(helper, data, source_path)
    except (ValueError, TypeError, AttributeError) as e:
        raise RieszUncertainParseException("Malformed scenario{}: {}".format(
            "" if source_path is None else " '{}'".format(source_path), e))


def parse_scenario_file(file_path):
    logger.debug("Reading scenario file '{}'.".format(file_path))
    data = RZUJSONParseHelper().readJSONFile(file_path)
    return parse_scenario_dict(data, source_path=file_path)


def find_scenario_files(corpus_dir):
    """
    The scenario files (*.json) of a corpus directory in name order.
    """
    if not os.path.isdir(corpus_dir):
        raise RieszUncertainParseException("'{}' is not a directory.".format(corpus_dir))
    files = sorted(glob.glob(os.path.join(corpus_dir, "*.json")))
    if len(files) == 0:
        raise RieszUncertainParseException("No scenario files found in '{}'.".format(corpus_dir))
    return files


def load_corpus(corpus_dir):
    return [parse_scenario_file(file_path) for file_path in find_scenario_files(corpus_dir)]


class InclusionTable(object):
    """
    Verdicts of a scenario corpus and the violations found: inclusion arrows
    with a pass on the left and a fail on the right, and golden mismatches.
    """

    def __init__(self, reports, violations, arrows):
        self.reports = dict(reports)
        self.violations = list(violations)
        self.arrows = list(arrows)

    @property
    def scenario_names(self):
        return sorted(self.reports.keys())

    def is_clean(self):
        return len(self.violations) == 0

    def cell_counts(self, class_label):
        """:return: dict verdict -> number of scenarios."""
        counts = dict((verdict, 0) for verdict in VERDICT_VALUES)
        for name in self.scenario_names:
            report = self.reports[name]
            if class_label in report.class_verdicts:
                counts[report.verdict(class_label)] += 1
        return counts

    def witnesses(self, class_labels):
        """Scenarios passing every class in class_labels."""
        return [name for name in self.scenario_names
                if all(self.reports[name].class_verdicts.get(label) == VERDICT_PASS for label in class_labels)]


def assemble_inclusion_table(results, arrows=None):
    """
    :param results: iterable of (name, ClassReport, golden mismatch list).
    :return: InclusionTable with violations ordered by scenario name.
    """
    arrows = RIESZUNCERTAIN_INCLUSION_ARROWS if arrows is None else arrows
    reports = dict()
    violations = []
    for name, report, mismatches in sorted(results, key=lambda result: result[0]):
        if name in reports:
            raise RieszUncertainInputException("Duplicate scenario name '{}'.".format(name))
        reports[name] = report
        for left, right in arrow_violations(report, arrows):
            violations.append((name, "arrow {} => {} violated ({} pass, {} fail)".format(left, right, left, right)))
        for mismatch in mismatches:
            violations.append((name, mismatch))
    for name, description in violations:
        logger.warning("Scenario '{}': {}".format(name, description))
    return InclusionTable(reports, violations, arrows)


def inclusion_table(scenarios, overrides=None):
    """
    Classify every scenario and check the inclusion arrows and golden data.

    :param scenarios: nonempty list of Scenario.
    :param overrides: dict of DiagnosticConfig overrides applied to every scenario.
    :return: InclusionTable
    """
    if len(scenarios) == 0:
        raise RieszUncertainInputException("The scenario corpus is empty.")
    overrides = dict(overrides) if overrides is not None else dict()
    results = []
    for scenario in scenarios:
        report = scenario.classify(**overrides)
        results.append((scenario.name, report, scenario.golden_mismatches(report)))
    return assemble_inclusion_table(results)


class TauberianEvidence(object):
    """
    Finite-horizon support for the Tauberian implication: the weight
    condition, slow oscillation and Riesz convergence should come with a
    small raw almost sure gap.
    """

    def __init__(self, weight_profile, so_verdict, riesz_verdict, budget, raw_tail_gap, raw_tolerance):
        self.weight_profile = weight_profile
        self.so_verdict = so_verdict
        self.riesz_verdict = riesz_verdict
        self.budget = budget
        self.raw_tail_gap = raw_tail_gap
        self.raw_tolerance = raw_tolerance

    @property
    def hypotheses_hold(self):
        return self.weight_profile.holds and self.so_verdict == VERDICT_PASS and self.riesz_verdict == VERDICT_PASS

    @property
    def conclusion_supported(self):
        return self.raw_tail_gap < self.raw_tolerance

    def __repr__(self):
        return ("TauberianEvidence(weights={}, so={}, m_R={}, budget={}, raw_tail_gap={:.3g})"
                .format(self.weight_profile.verdict, self.so_verdict, self.riesz_verdict, self.budget.verdict,
                        self.raw_tail_gap))


def tauberian_evidence(scenario, eps=None, lam=None, raw_tolerance=1e-2, **overrides):
    """
    Bundle the evidence around the Tauberian implication for a scenario:
    the n p_n / P_n profile, the so and m_R verdicts, a Borel-Cantelli budget
    of the events {|nu_nj - xi| >= eps/2} union {max_{nj <= k <= (1+lam) nj}
    |xi_k - xi| >= eps/2} along nj = floor((1+lam)^j), and the raw tail
    almost sure gap.

    :param eps: event threshold (default: largest of the epsilon grid).
    :param lam: window parameter (default: first of the lambda grid).
    :return: TauberianEvidence
    """
    config = scenario.diagnostic_config(**overrides)
    report = classify(scenario.sequence(config.horizon), scenario.weights, scenario.orlicz, config,
                      name=scenario.name)
    eps = max(config.epsilon_grid) if eps is None else float(eps)
    lam = config.lambda_grid[0] if lam is None else float(lam)
    seq = scenario.sequence(config.horizon)
    space = seq.space
    terms = seq.as_array()[:config.horizon]
    limit = seq.limit.values
    nu = transform_sequence(terms, scenario.weights)

    checkpoints = []
    j = 0
    while True:
        n_j = int(math.floor((1.0 + lam) ** j + 1e-9))
        if n_j > config.horizon:
            break
        if (len(checkpoints) == 0) or (n_j > checkpoints[-1]):
            checkpoints.append(n_j)
        j += 1
    event_measures = []
    for n_j in checkpoints:
        end = min(int(math.floor((1.0 + lam) * n_j + 1e-9)), config.horizon)
        riesz_event = numpy.abs(nu[n_j - 1] - limit) >= eps / 2.0
        window_event = numpy.abs(terms[n_j - 1:end] - limit[None, :]).max(axis=0) >= eps / 2.0
        event_measures.append(space.measure_of_mask(space.masks_from_bool(riesz_event | window_event)))
    budget = borel_cantelli_budget(event_measures, tolerance=config.tolerance, tail_fraction=config.tail_fraction)
    raw_tail_gap = report.get_profile("f").tail_max
    return TauberianEvidence(report.tauberian, report.verdict("so"), report.verdict("m_R"), budget, raw_tail_gap,
                             raw_tolerance)
