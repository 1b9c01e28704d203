#!/usr/bin/env python
"""
RieszUncertain - Utilities shared across the package: exceptions, validation
reports, a JSON parse helper for scenario files and numerical helpers.
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
# Purpose:  Provides a set of utilities used across the whole package.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import json
import logging
import math
import os

import numpy

logger = logging.getLogger(__name__)

RZU_HARD_MAX_ATOMS = 16


class RieszUncertainException(Exception):

    def __init__(self, value):
        """
        Init for the RieszUncertainException class
        """
        self.value = value

    def __str__(self):
        """
        Return a string representation of the exception
        """
        return repr(self.value)


class RieszUncertainInputException(RieszUncertainException):
    """
    Raised when a library operation is given arguments outside its domain
    (unknown atom, index beyond the horizon, non-positive weight, ...).
    """
    pass


class RieszUncertainParseException(RieszUncertainException):
    """
    Raised when a scenario or configuration file cannot be read or does not
    have the expected structure.
    """
    pass


class AxiomCheck(object):

    def __init__(self, name, passed, witness=None):
        """
        :param name: name of the checked property (e.g., 'duality').
        :param passed: boolean.
        :param witness: first violating object found, None when passed.
        """
        self.name = name
        self.passed = bool(passed)
        self.witness = witness

    def __repr__(self):
        if self.passed:
            return "{}: pass".format(self.name)
        return "{}: FAIL ({})".format(self.name, self.witness)


class ValidationReport(object):
    """
    An ordered collection of AxiomCheck results. Validation functions fill a
    report rather than raising so every violated property is visible at once.
    """

    def __init__(self, subject):
        self.subject = subject
        self.checks = []

    def add_check(self, name, passed, witness=None):
        check = AxiomCheck(name, passed, witness)
        if not check.passed:
            logger.debug("{}: check '{}' failed with witness {}".format(self.subject, name, witness))
        self.checks.append(check)
        return check

    def extend(self, other):
        """
        Append the checks of another report, prefixing their names with that
        report's subject.
        """
        for check in other.checks:
            self.checks.append(AxiomCheck("{}.{}".format(other.subject, check.name), check.passed,
                                          check.witness))

    def is_valid(self):
        return all(check.passed for check in self.checks)

    def failed_checks(self):
        return [check for check in self.checks if not check.passed]

    def get_check(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise RieszUncertainInputException("No check named '{}' in report for '{}'.".format(name, self.subject))

    def summary_lines(self):
        lines = ["{}: {}".format(self.subject, "VALID" if self.is_valid() else "INVALID")]
        for check in self.checks:
            lines.append("  " + repr(check))
        return lines


class RZUJSONParseHelper(object):
    """
    Navigates parsed JSON structures by a sequence of keys, raising
    RieszUncertainParseException when a key is missing or a value has the
    wrong type.
    """

    def readJSONFile(self, file_path):
        """
        Read a JSON file returning the data structure produced.
        :param file_path: input file path.
        :return: parsed data structure.
        """
        try:
            with open(file_path, 'r') as f:
                return json.load(f)
        except (OSError, ValueError) as e:
            raise RieszUncertainParseException("Could not read JSON file '{}': {}".format(file_path, e))

    def _walk(self, json_obj, tree_sequence):
        curr_json_obj = json_obj
        steps_str = ""
        for tree_step in tree_sequence:
            steps_str = steps_str + ":" + tree_step
            if isinstance(curr_json_obj, dict) and (tree_step in curr_json_obj):
                curr_json_obj = curr_json_obj[tree_step]
            else:
                raise RieszUncertainParseException("Could not find '{}'".format(steps_str))
        return curr_json_obj, steps_str

    def doesPathExist(self, json_obj, tree_sequence):
        """
        A function which tests whether a path exists within a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :return: boolean
        """
        try:
            self._walk(json_obj, tree_sequence)
        except RieszUncertainParseException:
            return False
        return True

    def getStrValue(self, json_obj, tree_sequence, valid_values=None):
        """
        A function which retrieves a single string value from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :param valid_values: optional list of accepted values.
        :return: str
        """
        curr_json_obj, steps_str = self._walk(json_obj, tree_sequence)
        if not isinstance(curr_json_obj, str):
            raise RieszUncertainParseException("The value at '{}' is not a string.".format(steps_str))
        if valid_values is not None:
            if curr_json_obj not in valid_values:
                raise RieszUncertainParseException("'{}' is not within the list of valid values {}.".format(
                    curr_json_obj, valid_values))
        return curr_json_obj

    def getBooleanValue(self, json_obj, tree_sequence):
        """
        A function which retrieves a single boolean value from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :return: bool
        """
        curr_json_obj, steps_str = self._walk(json_obj, tree_sequence)
        if not isinstance(curr_json_obj, bool):
            raise RieszUncertainParseException("'{}' is not 'true' or 'false'.".format(curr_json_obj))
        return curr_json_obj

    def getNumericValue(self, json_obj, tree_sequence, valid_lower=None, valid_upper=None):
        """
        A function which retrieves a single numeric value from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :param valid_lower: optional inclusive lower bound.
        :param valid_upper: optional inclusive upper bound.
        :return: float
        """
        curr_json_obj, steps_str = self._walk(json_obj, tree_sequence)
        out_value = self._as_number(curr_json_obj, steps_str)
        if valid_lower is not None:
            if out_value < valid_lower:
                raise RieszUncertainParseException("'{}' at '{}' is less than the valid range ({}).".format(
                    out_value, steps_str, valid_lower))
        if valid_upper is not None:
            if out_value > valid_upper:
                raise RieszUncertainParseException("'{}' at '{}' is higher than the valid range ({}).".format(
                    out_value, steps_str, valid_upper))
        return out_value

    def getListValue(self, json_obj, tree_sequence):
        """
        A function which retrieves a list of values from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :return: list
        """
        curr_json_obj, steps_str = self._walk(json_obj, tree_sequence)
        if not isinstance(curr_json_obj, list):
            raise RieszUncertainParseException("Retrieved value at '{}' is not a list.".format(steps_str))
        return curr_json_obj

    def getNumericListValue(self, json_obj, tree_sequence):
        """
        A function which retrieves a list of numbers from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :return: list of floats
        """
        values = self.getListValue(json_obj, tree_sequence)
        steps_str = ":" + ":".join(tree_sequence)
        return [self._as_number(val, steps_str) for val in values]

    def getNumericMatrixValue(self, json_obj, tree_sequence, n_cols=None):
        """
        A function which retrieves a list of lists of numbers (rows) from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :param n_cols: optional required row length.
        :return: list of lists of floats
        """
        rows = self.getListValue(json_obj, tree_sequence)
        steps_str = ":" + ":".join(tree_sequence)
        out_rows = []
        for row in rows:
            if not isinstance(row, list):
                raise RieszUncertainParseException("The rows at '{}' must be lists.".format(steps_str))
            if (n_cols is not None) and (len(row) != n_cols):
                raise RieszUncertainParseException("The rows at '{}' must have {} values.".format(steps_str, n_cols))
            out_rows.append([self._as_number(val, steps_str) for val in row])
        return out_rows

    def getDictValue(self, json_obj, tree_sequence):
        """
        A function which retrieves a nested object from a JSON structure.
        :param json_obj:
        :param tree_sequence: list of strings
        :return: dict
        """
        curr_json_obj, steps_str = self._walk(json_obj, tree_sequence)
        if not isinstance(curr_json_obj, dict):
            raise RieszUncertainParseException("Retrieved value at '{}' is not an object.".format(steps_str))
        return curr_json_obj

    def _as_number(self, value, steps_str):
        if isinstance(value, bool):
            raise RieszUncertainParseException("The identified value is not numeric '{}'".format(steps_str))
        if isinstance(value, (int, float)):
            out_value = float(value)
        elif isinstance(value, str):
            try:
                out_value = float(value)
            except ValueError:
                raise RieszUncertainParseException("The identified value is not numeric '{}'".format(steps_str))
        else:
            raise RieszUncertainParseException("The identified value is not numeric '{}'".format(steps_str))
        if not math.isfinite(out_value):
            raise RieszUncertainParseException("The identified value is not finite '{}'".format(steps_str))
        return out_value


def compensated_cumsum(values):
    """
    Running sums along the first axis using Neumaier's compensated summation.
    Works on 1D arrays and, column-wise, on 2D arrays.

    :param values: array_like of floats.
    :return: numpy array of the same shape holding the partial sums.
    """
    arr = numpy.asarray(values, dtype=float)
    out = numpy.empty_like(arr)
    if arr.shape[0] == 0:
        return out
    total = numpy.zeros(arr.shape[1:], dtype=float)
    comp = numpy.zeros(arr.shape[1:], dtype=float)
    for i in range(arr.shape[0]):
        val = arr[i]
        t = total + val
        big = numpy.abs(total) >= numpy.abs(val)
        comp += numpy.where(big, (total - t) + val, (val - t) + total)
        total = t
        out[i] = total + comp
    return out


def format_fixed(value, decimals=12):
    """
    Format a number with a fixed number of decimal places. Negative zero is
    written as zero and non-finite values as 'inf', '-inf' or 'nan'.
    """
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    out_str = "{:.{}f}".format(value, decimals)
    if out_str.startswith("-") and float(out_str) == 0.0:
        out_str = out_str[1:]
    return out_str


def parse_float_list(list_str):
    """
    Parse a comma separated list of numbers (e.g., '0.1,0.01').
    :return: list of floats
    """
    out_vals = []
    for item in list_str.split(","):
        item = item.strip()
        if item == "":
            continue
        try:
            out_vals.append(float(item))
        except ValueError:
            raise RieszUncertainParseException("'{}' is not a number.".format(item))
    if len(out_vals) == 0:
        raise RieszUncertainParseException("An empty list was provided: '{}'".format(list_str))
    return out_vals


def get_max_atoms():
    """
    The maximum number of atoms of an uncertainty space, read from
    RIESZ_UNCERTAIN_MAX_ATOMS (default and ceiling 16).
    """
    env_val = os.getenv('RIESZ_UNCERTAIN_MAX_ATOMS', None)
    if env_val is None:
        return RZU_HARD_MAX_ATOMS
    try:
        max_atoms = int(env_val)
    except ValueError:
        raise RieszUncertainInputException("RIESZ_UNCERTAIN_MAX_ATOMS is not an integer: '{}'".format(env_val))
    if max_atoms < 1:
        raise RieszUncertainInputException("RIESZ_UNCERTAIN_MAX_ATOMS must be at least 1.")
    if max_atoms > RZU_HARD_MAX_ATOMS:
        logger.warning("RIESZ_UNCERTAIN_MAX_ATOMS={} exceeds the ceiling of {}; using {}.".format(
            max_atoms, RZU_HARD_MAX_ATOMS, RZU_HARD_MAX_ATOMS))
        max_atoms = RZU_HARD_MAX_ATOMS
    return max_atoms


def get_ncores(cli_ncores=0):
    """
    Number of worker processes: the larger of the command line value and
    RIESZ_UNCERTAIN_NCORES, at least 1.
    """
    try:
        ncores = int(os.getenv('RIESZ_UNCERTAIN_NCORES', 0))
    except ValueError:
        ncores = 0
    if (cli_ncores is not None) and (cli_ncores > ncores):
        ncores = cli_ncores
    if ncores < 1:
        ncores = 1
    return ncores


def get_usage_db_conn():
    return os.getenv('RIESZ_UNCERTAIN_USAGE_DB', 'sqlite:///rieszuncertain_usage.db')
