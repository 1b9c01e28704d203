#!/usr/bin/env python
"""
RieszUncertain - command line tool for validating, classifying and
transforming uncertain sequence scenarios.
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
# Purpose:  Command line entry point (rzu.py <command> ...).
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import sys
import time

import rieszuncertain.rieszuncertaincli

logger = logging.getLogger('rzu.py')

if __name__ == "__main__":
    start_time = time.time()
    logger.info("RieszUncertain started: {}".format(" ".join(sys.argv[1:])))
    exit_code = rieszuncertain.rieszuncertaincli.main(sys.argv[1:])
    logger.info("RieszUncertain processing completed in {:.3f} seconds (exit code {}) - rzu.py.".format(
        time.time() - start_time, exit_code))
    sys.exit(exit_code)
