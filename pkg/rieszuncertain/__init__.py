#!/usr/bin/env python
"""
RieszUncertain - this file is needed to ensure it can be imported

See other source files for details
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
# Purpose:  Setup variables and imports across the whole module
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import os
import sys
import logging
import logging.config
import json

RIESZUNCERTAIN_VERSION_MAJOR = 1
RIESZUNCERTAIN_VERSION_MINOR = 0
RIESZUNCERTAIN_VERSION_PATCH = 0

py_sys_version = sys.version_info
py_sys_version_str = "{}.{}".format(py_sys_version.major, py_sys_version.minor)

RIESZUNCERTAIN_VERSION = "{}.{}.{}".format(RIESZUNCERTAIN_VERSION_MAJOR, RIESZUNCERTAIN_VERSION_MINOR,
                                          RIESZUNCERTAIN_VERSION_PATCH)
RIESZUNCERTAIN_COPYRIGHT_YEAR = "2026"
RIESZUNCERTAIN_COPYRIGHT_NAMES = "RieszUncertain Developers"

# Classes of sequences reported by the classifier, in report order.
RIESZUNCERTAIN_RAW_CLASSES = ["f", "m", "e", "d", "so", "m_tilde"]
RIESZUNCERTAIN_RIESZ_CLASSES = ["f_R", "m_R", "e_R", "d_R", "u_R", "dp_R"]
RIESZUNCERTAIN_ORLICZ_CLASSES = ["f_R^phi", "m_R^phi", "e_R^phi"]
RIESZUNCERTAIN_WEIGHT_ROWS = ["regularity", "tauberian"]

# Arrows of the inclusion diagram: a pass on the left must not meet a fail on the right.
RIESZUNCERTAIN_INCLUSION_ARROWS = [("f", "f_R"), ("e", "e_R"), ("m", "m_R"), ("d", "d_R"),
                                   ("e", "m"), ("m", "d"), ("e_R", "m_R"), ("m_R", "d_R")]

rzu_log_level = os.getenv('RIESZ_UNCERTAIN_LOG_LVL', 'INFO')

log_default_level = logging.INFO
if rzu_log_level.upper() == 'INFO':
    log_default_level = logging.INFO
elif rzu_log_level.upper() == 'DEBUG':
    log_default_level = logging.DEBUG
elif rzu_log_level.upper() == 'WARNING':
    log_default_level = logging.WARNING
elif rzu_log_level.upper() == 'ERROR':
    log_default_level = logging.ERROR
elif rzu_log_level.upper() == 'CRITICAL':
    log_default_level = logging.CRITICAL
else:
    raise Exception("Logging level specified ('{}') is not recognised.".format(rzu_log_level))

log_config_path = os.getenv('RIESZ_UNCERTAIN_LOG_CFG', None)
if (log_config_path is not None) and os.path.exists(log_config_path):
    with open(log_config_path, 'rt') as f:
        config = json.load(f)
    logging.config.dictConfig(config)
else:
    logging.basicConfig(level=log_default_level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
