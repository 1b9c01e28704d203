#!/usr/bin/env python
"""
Shared fixtures for the RieszUncertain test suite.
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
# Purpose:  pytest fixtures: spaces, the shipped corpus and fixture files.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import os
import sys

import pytest

REPO_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if REPO_DIR not in sys.path:
    sys.path.insert(0, REPO_DIR)

from rieszuncertain.rieszuncertaincore import UncertaintySpace  # noqa: E402

CORPUS_DIR = os.path.join(REPO_DIR, "share", "rieszuncertain", "scenarios")
FIXTURES_DIR = os.path.join(REPO_DIR, "tests", "fixtures")


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR


@pytest.fixture
def corpus_file():
    def _locate(name):
        return os.path.join(CORPUS_DIR, "{}.json".format(name))
    return _locate


@pytest.fixture
def fixture_file():
    def _locate(name):
        return os.path.join(FIXTURES_DIR, name)
    return _locate


@pytest.fixture
def one_atom_space():
    return UncertaintySpace.from_additive(["g1"], [1.0])


@pytest.fixture
def additive_space():
    return UncertaintySpace.from_additive(["g1", "g2", "g3"], [0.2, 0.3, 0.5])


@pytest.fixture
def possibility_space():
    return UncertaintySpace.from_possibility(["g1", "g2", "g3"], [1.0, 0.3, 0.5], dual=True)
