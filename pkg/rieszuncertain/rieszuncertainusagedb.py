#!/usr/bin/env python
"""
RieszUncertain - a log of the command line runs held in a database.
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
# Purpose:  Record the start and end of each command run.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import datetime

from sqlalchemy.orm import declarative_base
import sqlalchemy
import sqlalchemy.orm

logger = logging.getLogger(__name__)

Base = declarative_base()


class RZUUsageLog(Base):
    __tablename__ = "RZUUsageLog"

    ID = sqlalchemy.Column(sqlalchemy.Integer, primary_key=True, autoincrement=True)
    Command = sqlalchemy.Column(sqlalchemy.String, default="NA")
    Update = sqlalchemy.Column(sqlalchemy.DateTime)
    Description = sqlalchemy.Column(sqlalchemy.String)
    Scenario = sqlalchemy.Column(sqlalchemy.String, nullable=True)
    ExitCode = sqlalchemy.Column(sqlalchemy.Integer, nullable=True)
    StartBlock = sqlalchemy.Column(sqlalchemy.Boolean, default=False)
    EndBlock = sqlalchemy.Column(sqlalchemy.Boolean, default=False)


class RieszUncertainUsageLogDB(object):

    def __init__(self, db_conn):
        """
        :param db_conn: SQLAlchemy connection string (e.g., 'sqlite:///rieszuncertain_usage.db').
        """
        self.db_conn = db_conn

    def init_usage_log_db(self, drop_tables=False):
        """
        Create the usage table, optionally dropping an existing one first.
        """
        logger.debug("Creating Database Engine.")
        db_engine = sqlalchemy.create_engine(self.db_conn)

        if drop_tables:
            logger.debug("Drop usage table if within the existing database.")
            Base.metadata.drop_all(db_engine)

        logger.debug("Creating Usage Database.")
        Base.metadata.create_all(db_engine)
        db_engine.dispose()

    def add_entry(self, command, description, scenario=None, exit_code=None, start_block=False, end_block=False):
        """
        Add an entry into the usage log database.
        :param command: the CLI command (validate, classify, ...).
        :param description: free text.
        :param scenario: scenario file or corpus directory.
        :param exit_code: exit status, for end-of-run entries.
        :param start_block: entry opens a run.
        :param end_block: entry closes a run.
        """
        logger.debug("Creating Database Engine.")
        db_engine = sqlalchemy.create_engine(self.db_conn)
        Base.metadata.create_all(db_engine)

        logger.debug("Creating Database Session.")
        session_sqlalc = sqlalchemy.orm.sessionmaker(bind=db_engine)
        ses = session_sqlalc()

        logger.debug("Adding Update to Database.")
        ses.add(RZUUsageLog(Command=command, Update=datetime.datetime.now(), Description=description,
                            Scenario=scenario, ExitCode=exit_code, StartBlock=start_block, EndBlock=end_block))
        ses.commit()
        ses.close()
        db_engine.dispose()
        logger.debug("Committed and closed db session.")

    def get_entries(self, command=None):
        """
        :param command: optional filter on the command.
        :return: list of (command, description, scenario, exit_code, start_block, end_block) in insertion order.
        """
        db_engine = sqlalchemy.create_engine(self.db_conn)
        Base.metadata.create_all(db_engine)
        session_sqlalc = sqlalchemy.orm.sessionmaker(bind=db_engine)
        ses = session_sqlalc()
        query = ses.query(RZUUsageLog)
        if command is not None:
            query = query.filter(RZUUsageLog.Command == command)
        out = [(row.Command, row.Description, row.Scenario, row.ExitCode, row.StartBlock, row.EndBlock)
               for row in query.order_by(RZUUsageLog.ID).all()]
        ses.close()
        db_engine.dispose()
        return out
