#!/usr/bin/env python
"""
RieszUncertain - the command line interface.
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
# Purpose:  Parse the command line into a RunConfig and dispatch to
#           rieszuncertainrun, mapping exceptions onto exit codes:
#           0 success, 1 domain failure, 2 input or parse failure.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import argparse
import logging
import sys

import rieszuncertain.rieszuncertainrun
from rieszuncertain import RIESZUNCERTAIN_VERSION
from rieszuncertain.rieszuncertainusagedb import RieszUncertainUsageLogDB
from rieszuncertain.rieszuncertainutils import RieszUncertainException
from rieszuncertain.rieszuncertainutils import RieszUncertainParseException
from rieszuncertain.rieszuncertainutils import get_ncores
from rieszuncertain.rieszuncertainutils import get_usage_db_conn
from rieszuncertain.rieszuncertainutils import parse_float_list
from rieszuncertain.rieszuncertainverify import DEFAULT_SEED

logger = logging.getLogger(__name__)

RZU_COMMANDS = ["validate", "classify", "table", "transform", "check"]
RZU_OUT_FORMATS = ["csv", "md"]

EXIT_SUCCESS = 0
EXIT_DOMAIN_FAILURE = 1
EXIT_INPUT_FAILURE = 2


class RunConfig(object):
    """
    The options of one command line run.
    """

    def __init__(self, command, inputs, horizon=None, eps_grid=None, lambda_grid=None, tolerance=None,
                 out_format="csv", out_path=None, seed=DEFAULT_SEED, ncores=1, record_db=False, n_list=None):
        if command not in RZU_COMMANDS:
            raise RieszUncertainParseException("Unknown command '{}'.".format(command))
        self.command = command
        self.inputs = list(inputs)
        self.horizon = horizon
        self.eps_grid = None if eps_grid is None else [float(eps) for eps in eps_grid]
        self.lambda_grid = None if lambda_grid is None else [float(lam) for lam in lambda_grid]
        self.tolerance = tolerance
        self.out_format = out_format
        self.out_path = out_path
        self.seed = seed
        self.ncores = ncores
        self.record_db = record_db
        self.n_list = n_list

        if (self.horizon is not None) and (self.horizon < 10):
            raise RieszUncertainParseException("--horizon must be at least 10 (got {}).".format(self.horizon))
        if (self.eps_grid is not None) and min(self.eps_grid) <= 0:
            raise RieszUncertainParseException("--eps values must be positive.")
        if (self.lambda_grid is not None) and min(self.lambda_grid) <= 0:
            raise RieszUncertainParseException("--lambda values must be positive.")
        if (self.tolerance is not None) and not (self.tolerance > 0):
            raise RieszUncertainParseException("--tol must be positive.")
        if self.out_format not in RZU_OUT_FORMATS:
            raise RieszUncertainParseException("--format must be one of {}.".format(RZU_OUT_FORMATS))
        if self.command == "transform" and not self.n_list:
            raise RieszUncertainParseException("transform needs at least one index (--n).")

    def overrides(self):
        """DiagnosticConfig overrides given on the command line."""
        return dict(horizon=self.horizon, epsilon_grid=self.eps_grid, lambda_grid=self.lambda_grid,
                    tolerance=self.tolerance)

    def __repr__(self):
        return "RunConfig(command={}, inputs={}, overrides={})".format(self.command, self.inputs, self.overrides())


def _float_list_arg(list_str):
    try:
        return parse_float_list(list_str)
    except RieszUncertainParseException as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--record-db", action='store_true', default=False,
                        help="Record the start and end of the run in the usage database "
                             "(RIESZ_UNCERTAIN_USAGE_DB).")

    diag = argparse.ArgumentParser(add_help=False)
    diag.add_argument("--horizon", type=int, default=None, help="Override the diagnostic horizon N (>= 10).")
    diag.add_argument("--eps", type=_float_list_arg, default=None, help="Epsilon grid, e.g., '0.1,0.01'.")
    diag.add_argument("--lambda", dest="lambda_grid", type=_float_list_arg, default=None,
                      help="Lambda grid for slow oscillation, e.g., '0.5,1'.")
    diag.add_argument("--tol", type=float, default=None, help="Verdict tolerance.")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", type=str, default="csv", choices=RZU_OUT_FORMATS,
                        help="Output format written to stdout.")
    output.add_argument("--out", type=str, default=None,
                        help="Write <stem>.csv and <stem>.md instead of printing.")

    parser = argparse.ArgumentParser(prog="rzu.py",
                                     description="Riesz-type summability diagnostics of uncertain sequences.")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(RIESZUNCERTAIN_VERSION))
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    p_validate = subparsers.add_parser("validate", parents=[common], help="Check the axioms of a scenario.")
    p_validate.add_argument("scenario", type=str, help="Path to the JSON scenario file.")

    p_classify = subparsers.add_parser("classify", parents=[common, diag, output],
                                       help="Classify a scenario and write its class report.")
    p_classify.add_argument("scenario", type=str, help="Path to the JSON scenario file.")

    p_table = subparsers.add_parser("table", parents=[common, diag, output],
                                    help="Build the inclusion table of a scenario corpus.")
    p_table.add_argument("corpus", type=str, help="Directory of JSON scenario files.")
    p_table.add_argument("-n", "--ncores", type=int, default=0,
                         help="Number of processing cores to use (or use RIESZ_UNCERTAIN_NCORES).")

    p_transform = subparsers.add_parser("transform", parents=[common],
                                        help="Print the Riesz transform of a scenario at given indices.")
    p_transform.add_argument("scenario", type=str, help="Path to the JSON scenario file.")
    p_transform.add_argument("--n", type=int, nargs='+', required=True, help="Indices n to evaluate.")

    p_check = subparsers.add_parser("check", parents=[common], help="Run the seeded instance suites.")
    p_check.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of the random instances.")
    p_check.add_argument("--corpus", type=str, default=None,
                         help="Scenario corpus for the e_R within m_R suite.")
    return parser


def parse_run_config(argv):
    """
    :param argv: list of command line arguments (without the program name).
    :return: RunConfig
    """
    args = build_parser().parse_args(argv)
    if args.command == "validate":
        return RunConfig("validate", [args.scenario], record_db=args.record_db)
    elif args.command == "classify":
        return RunConfig("classify", [args.scenario], horizon=args.horizon, eps_grid=args.eps,
                         lambda_grid=args.lambda_grid, tolerance=args.tol, out_format=args.format,
                         out_path=args.out, record_db=args.record_db)
    elif args.command == "table":
        return RunConfig("table", [args.corpus], horizon=args.horizon, eps_grid=args.eps,
                         lambda_grid=args.lambda_grid, tolerance=args.tol, out_format=args.format,
                         out_path=args.out, ncores=get_ncores(args.ncores), record_db=args.record_db)
    elif args.command == "transform":
        return RunConfig("transform", [args.scenario], n_list=args.n, record_db=args.record_db)
    corpus = [] if args.corpus is None else [args.corpus]
    return RunConfig("check", corpus, seed=args.seed, record_db=args.record_db)


def run(run_config, out=None):
    """
    Execute a RunConfig.
    :return: exit code
    """
    out = sys.stdout if out is None else out
    if run_config.command == "validate":
        return rieszuncertain.rieszuncertainrun.cmd_validate(run_config.inputs[0], out=out)
    elif run_config.command == "classify":
        return rieszuncertain.rieszuncertainrun.cmd_classify(run_config.inputs[0], run_config.overrides(),
                                                             run_config.out_format, run_config.out_path, out=out)
    elif run_config.command == "table":
        return rieszuncertain.rieszuncertainrun.cmd_table(run_config.inputs[0], run_config.overrides(),
                                                          run_config.out_format, run_config.out_path,
                                                          run_config.ncores, out=out)
    elif run_config.command == "transform":
        return rieszuncertain.rieszuncertainrun.cmd_transform(run_config.inputs[0], run_config.n_list, out=out)
    corpus_dir = run_config.inputs[0] if len(run_config.inputs) > 0 else None
    return rieszuncertain.rieszuncertainrun.cmd_check(run_config.seed, corpus_dir, out=out)


def main(argv=None, out=None):
    """
    :param argv: command line arguments (default sys.argv[1:]).
    :param out: stream receiving the reports (default stdout).
    :return: exit code
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        run_config = parse_run_config(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_FAILURE
    except RieszUncertainParseException:
        logger.error("Invalid command line options.", exc_info=True)
        return EXIT_INPUT_FAILURE

    usage_db = None
    if run_config.record_db:
        usage_db = RieszUncertainUsageLogDB(get_usage_db_conn())
        usage_db.add_entry(run_config.command, "Started: {}.".format(run_config.command),
                           scenario=";".join(run_config.inputs), start_block=True)

    logger.debug("Running {}".format(run_config))
    try:
        exit_code = run(run_config, out=out)
    except RieszUncertainParseException:
        logger.error("Failed to read the input of '{}'.".format(run_config.command), exc_info=True)
        exit_code = EXIT_INPUT_FAILURE
    except RieszUncertainException:
        logger.error("Failed to complete '{}'.".format(run_config.command), exc_info=True)
        exit_code = EXIT_DOMAIN_FAILURE

    if usage_db is not None:
        usage_db.add_entry(run_config.command, "Finished: {}.".format(run_config.command),
                           scenario=";".join(run_config.inputs), exit_code=exit_code, end_block=True)
    return exit_code
