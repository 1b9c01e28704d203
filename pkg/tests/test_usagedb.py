#!/usr/bin/env python
"""
Tests for rieszuncertain.rieszuncertainusagedb.
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
# Purpose:  The usage log database.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

from rieszuncertain.rieszuncertainusagedb import RieszUncertainUsageLogDB


def test_entries_round_trip(tmp_path):
    usage_db = RieszUncertainUsageLogDB("sqlite:///{}".format(tmp_path / "usage.db"))
    usage_db.init_usage_log_db()
    usage_db.add_entry("table", "Started: table.", scenario="corpus", start_block=True)
    usage_db.add_entry("check", "Finished: check.", exit_code=1, end_block=True)
    assert usage_db.get_entries() == [("table", "Started: table.", "corpus", None, True, False),
                                      ("check", "Finished: check.", None, 1, False, True)]
    assert usage_db.get_entries("check") == [("check", "Finished: check.", None, 1, False, True)]


def test_drop_tables(tmp_path):
    usage_db = RieszUncertainUsageLogDB("sqlite:///{}".format(tmp_path / "usage.db"))
    usage_db.add_entry("validate", "Started: validate.")
    usage_db.init_usage_log_db(drop_tables=True)
    assert usage_db.get_entries() == []
