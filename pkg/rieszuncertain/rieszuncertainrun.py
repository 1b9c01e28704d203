#!/usr/bin/env python
"""
RieszUncertain - the functions behind each command line command. Every
function writes its report to the given stream and returns the exit status.
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
# Purpose:  Run the validate, classify, table, transform and check commands.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import multiprocessing
import os
import sys

import numpy
import pandas

from rieszuncertain.rieszuncertaincore import validate_space
from rieszuncertain.rieszuncertainorlicz import validate_orlicz
from rieszuncertain.rieszuncertainreports import REPORT_DECIMALS
from rieszuncertain.rieszuncertainreports import class_report_csv
from rieszuncertain.rieszuncertainreports import class_report_markdown
from rieszuncertain.rieszuncertainreports import inclusion_table_csv
from rieszuncertain.rieszuncertainreports import inclusion_table_markdown
from rieszuncertain.rieszuncertainscenarios import assemble_inclusion_table
from rieszuncertain.rieszuncertainscenarios import find_scenario_files
from rieszuncertain.rieszuncertainscenarios import load_corpus
from rieszuncertain.rieszuncertainscenarios import parse_scenario_file
from rieszuncertain.rieszuncertainsummability import check_regularity
from rieszuncertain.rieszuncertainsummability import inverse_transform_sequence
from rieszuncertain.rieszuncertainsummability import transform_sequence
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainutils import ValidationReport
from rieszuncertain.rieszuncertainutils import format_fixed
from rieszuncertain.rieszuncertainverify import run_all_suites

logger = logging.getLogger(__name__)


def validation_report(scenario):
    """
    The axioms of the scenario's space and Orlicz function and the weight
    checks over its horizon.
    :return: ValidationReport
    """
    report = ValidationReport(scenario.name)
    report.extend(validate_space(scenario.space))
    report.extend(validate_orlicz(scenario.orlicz))
    weight_report = ValidationReport("weights")
    try:
        scenario.weights.weights_upto(scenario.horizon)
        weight_report.add_check("strictly_positive", True)
        logger.info("Weights of '{}': {}".format(scenario.name, check_regularity(scenario.weights, scenario.horizon)))
    except RieszUncertainInputException as e:
        weight_report.add_check("strictly_positive", False, str(e))
    report.extend(weight_report)
    return report


def _read_valid_scenario(scenario_file):
    """
    Parse a scenario file and refuse it unless every validation check passes.
    """
    scenario = parse_scenario_file(scenario_file)
    report = validation_report(scenario)
    if not report.is_valid():
        raise RieszUncertainInputException("Scenario '{}' is invalid: {}".format(
            scenario.name, report.failed_checks()))
    return scenario


def _write_pair(out_path, csv_str, md_str):
    stem = os.path.splitext(out_path)[0]
    with open(stem + ".csv", "w", newline="", encoding="utf-8") as f:
        f.write(csv_str)
    with open(stem + ".md", "w", newline="", encoding="utf-8") as f:
        f.write(md_str)
    logger.info("Written '{}.csv' and '{}.md'.".format(stem, stem))


def cmd_validate(scenario_file, out=None):
    """
    Print the per-axiom results for a scenario file.
    :return: 0 when every check passes, 1 otherwise.
    """
    out = sys.stdout if out is None else out
    scenario = parse_scenario_file(scenario_file)
    report = validation_report(scenario)
    for line in report.summary_lines():
        out.write(line + "\n")
    if not report.is_valid():
        logger.error("Scenario '{}' failed: {}".format(scenario.name,
                                                       ", ".join(check.name for check in report.failed_checks())))
        return 1
    return 0


def cmd_classify(scenario_file, overrides=None, out_format="csv", out_path=None, out=None):
    """
    Classify a scenario and emit the class report. With out_path the CSV and
    Markdown reports are written next to each other (<stem>.csv, <stem>.md);
    otherwise the chosen format goes to the output stream.
    :return: 0 once the report is produced, whatever the verdicts.
    """
    out = sys.stdout if out is None else out
    overrides = dict(overrides) if overrides is not None else dict()
    scenario = _read_valid_scenario(scenario_file)
    class_report = scenario.classify(**overrides)
    csv_str = class_report_csv(class_report)
    md_str = class_report_markdown(class_report)
    if out_path is not None:
        _write_pair(out_path, csv_str, md_str)
    else:
        out.write(csv_str if out_format == "csv" else md_str)
    return 0


def _classify_task(params):
    """
    Classify one scenario file; takes [file path, overrides] so it can be
    used within multiprocessing.Pool.
    :return: (name, ClassReport, golden mismatches)
    """
    scenario = parse_scenario_file(params[0])
    report = scenario.classify(**params[1])
    return scenario.name, report, scenario.golden_mismatches(report)


def cmd_table(corpus_dir, overrides=None, out_format="csv", out_path=None, ncores=1, out=None):
    """
    Classify every scenario of a corpus directory and check the inclusion
    arrows and golden data.
    :return: 0 when there are no violations, 1 otherwise.
    """
    out = sys.stdout if out is None else out
    overrides = dict(overrides) if overrides is not None else dict()
    scenario_files = find_scenario_files(corpus_dir)
    tasks = [[scenario_file, overrides] for scenario_file in scenario_files]
    logger.info("Classifying {} scenarios using {} core(s).".format(len(tasks), ncores))
    if ncores > 1:
        with multiprocessing.Pool(processes=ncores) as pool:
            results = pool.map(_classify_task, tasks)
    else:
        results = [_classify_task(task) for task in tasks]
    table = assemble_inclusion_table(results)
    csv_str = inclusion_table_csv(table)
    md_str = inclusion_table_markdown(table)
    if out_path is not None:
        _write_pair(out_path, csv_str, md_str)
    else:
        out.write(csv_str if out_format == "csv" else md_str)
    if not table.is_clean():
        for name, description in table.violations:
            logger.error("Violation in scenario '{}': {}".format(name, description))
        return 1
    return 0


def transform_frame(scenario, n_list):
    """
    nu_n on every atom for the requested n with the round trip residual
    max |R^-1(R xi)_n - xi_n| over the atoms.
    """
    n_list = [int(n) for n in n_list]
    for n in n_list:
        if n < 1 or n > scenario.horizon:
            raise RieszUncertainInputException("n={} is outside 1..{} (the scenario horizon).".format(
                n, scenario.horizon))
    n_max = max(n_list)
    terms = scenario.sequence().as_array()[:n_max]
    nu = transform_sequence(terms, scenario.weights)
    residual = numpy.abs(inverse_transform_sequence(nu, scenario.weights) - terms).max(axis=1)
    rows = []
    for n in n_list:
        for j, atom in enumerate(scenario.space.atoms):
            rows.append((n, atom, format_fixed(nu[n - 1, j], REPORT_DECIMALS),
                         format_fixed(residual[n - 1], REPORT_DECIMALS)))
    return pandas.DataFrame(rows, columns=["n", "atom", "nu", "roundtrip_residual"])


def cmd_transform(scenario_file, n_list, out=None):
    """
    Print nu_n(gamma) for each requested n and atom of a valid scenario.
    :return: 0
    """
    out = sys.stdout if out is None else out
    scenario = _read_valid_scenario(scenario_file)
    out.write(transform_frame(scenario, n_list).to_csv(index=False, lineterminator="\n"))
    return 0


def cmd_check(seed, corpus_dir=None, out=None):
    """
    Run the seeded instance suites (and the e_R within m_R law over a corpus
    when given).
    :return: 0 when no suite reports a violation, 1 otherwise.
    """
    out = sys.stdout if out is None else out
    scenarios = load_corpus(corpus_dir) if corpus_dir is not None else None
    results = run_all_suites(seed, scenarios)
    rows = [(result.name, result.instances, result.violations, "{:.3e}".format(result.worst),
             "{:g}".format(result.tolerance)) for result in results]
    frame = pandas.DataFrame(rows, columns=["suite", "instances", "violations", "worst", "tolerance"])
    out.write(frame.to_csv(index=False, lineterminator="\n"))
    failed = [result.name for result in results if not result.passed]
    if len(failed) > 0:
        logger.error("Suites with violations: {}".format(", ".join(failed)))
        return 1
    return 0
