#!/usr/bin/env python
"""
RieszUncertain - CSV and Markdown output of class reports and inclusion
tables.
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
# Purpose:  Deterministic report emission: fixed row order and fixed
#           precision so identical inputs give byte-identical files.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging

import pandas

from rieszuncertain import RIESZUNCERTAIN_RAW_CLASSES
from rieszuncertain import RIESZUNCERTAIN_RIESZ_CLASSES
from rieszuncertain.rieszuncertainutils import format_fixed

logger = logging.getLogger(__name__)

REPORT_DECIMALS = 12
CLASS_REPORT_COLUMNS = ["class", "param", "tail_max_gap", "verdict"]
INCLUSION_COLUMNS = ["scenario", "class", "verdict"]

# Inclusion diagram layout: raw classes on top, Riesz classes below, '=>' between cells.
GRID_TOP = ["f", None, "e", "=>", "m", "=>", "d"]
GRID_BOTTOM = ["f_R", None, "e_R", "=>", "m_R", "=>", "d_R"]


def class_report_frame(report):
    rows = [(label, param, format_fixed(gap, REPORT_DECIMALS), verdict)
            for label, param, gap, verdict in report.rows()]
    return pandas.DataFrame(rows, columns=CLASS_REPORT_COLUMNS)


def class_report_csv(report):
    """
    The class report as CSV (class, param, tail-max gap, verdict).
    """
    return class_report_frame(report).to_csv(index=False, lineterminator="\n")


def _md_table(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(["---"] * len(header)) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return lines


def _grid_rows(cell_text):
    top = ["" if label is None else ("⇒" if label == "=>" else cell_text(label)) for label in GRID_TOP]
    down = ["⇓" if label not in (None, "=>") else "" for label in GRID_TOP]
    bottom = ["" if label is None else ("⇒" if label == "=>" else cell_text(label)) for label in GRID_BOTTOM]
    return [top, down, bottom]


def class_report_markdown(report):
    """
    A human readable grid of the verdicts mirroring the inclusion diagram,
    followed by every profile row and the weight conditions.
    """
    def _cell(label):
        return "{} ({})".format(label, report.class_verdicts.get(label, "n/a"))

    lines = ["# Class report: {}".format(report.name), ""]
    lines.append("Horizon {}, tolerance {}, tail fraction {} (EMPIRICAL verdicts).".format(
        report.config.horizon, report.config.tolerance, report.config.tail_fraction))
    lines.append("")
    grid = _grid_rows(_cell)
    lines += _md_table(grid[0], grid[1:])
    lines.append("")
    others = [label for label in report.class_labels if label not in (GRID_TOP + GRID_BOTTOM)]
    lines.append("Other classes: " + ", ".join("{} ({})".format(label, report.verdict(label)) for label in others))
    lines.append("")
    rows = [[label, param, format_fixed(gap, REPORT_DECIMALS), verdict] for label, param, gap, verdict in report.rows()]
    lines += _md_table(["class", "param", "tail-max gap", "verdict"], rows)
    lines.append("")
    lines.append("Regularity: {}".format(report.regularity))
    lines.append("Tauberian condition: {}".format(report.tauberian))
    return "\n".join(lines) + "\n"


def inclusion_table_frame(table):
    rows = []
    for name in table.scenario_names:
        report = table.reports[name]
        for label in report.class_labels:
            rows.append((name, label, report.verdict(label)))
    return pandas.DataFrame(rows, columns=INCLUSION_COLUMNS)


def inclusion_table_csv(table):
    return inclusion_table_frame(table).to_csv(index=False, lineterminator="\n")


def inclusion_table_markdown(table):
    """
    The inclusion diagram with per-class verdict counts over the corpus, the
    witnesses of m_R and f_R intersecting, the verdict matrix and the
    violation list.
    """
    def _cell(label):
        counts = table.cell_counts(label)
        return "{} ({}/{}/{})".format(label, counts["pass"], counts["fail"], counts["inconclusive"])

    lines = ["# Inclusion table", ""]
    lines.append("Cells give pass/fail/inconclusive counts over {} scenarios.".format(len(table.scenario_names)))
    lines.append("")
    grid = _grid_rows(_cell)
    witnesses = table.witnesses(["m_R", "f_R"])
    last_row = ["m_R ∩ f_R ≠ ∅", "", "witnessed by: " + (", ".join(witnesses) if witnesses else "none"),
                "", "", "", ""]
    lines += _md_table(grid[0], grid[1:] + [last_row])
    lines.append("")

    columns = RIESZUNCERTAIN_RAW_CLASSES + RIESZUNCERTAIN_RIESZ_CLASSES
    matrix = []
    for name in table.scenario_names:
        report = table.reports[name]
        matrix.append([name] + [report.class_verdicts.get(label, "n/a") for label in columns])
    lines += _md_table(["scenario"] + columns, matrix)
    lines.append("")
    if table.is_clean():
        lines.append("Violations: none.")
    else:
        lines.append("Violations:")
        for name, description in table.violations:
            lines.append("- {}: {}".format(name, description))
    return "\n".join(lines) + "\n"
