#!/usr/bin/env python
"""
Setup script for RieszUncertain. Use like this for Unix:

$ python setup.py install

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
# Purpose:  Installation of the RieszUncertain software
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

from setuptools import setup
import glob
import os

setup(name='RieszUncertain',
    version='1.0.0',
    description='A tool for Riesz-type summability diagnostics of uncertain sequences.',
    author='RieszUncertain Developers',
    scripts=['bin/rzu.py'],
    packages=['rieszuncertain'],
    package_dir={'rieszuncertain': 'rieszuncertain'},
    install_requires=['numpy', 'pandas>=1.5', 'SQLAlchemy>=1.4'],
    extras_require={'test': ['pytest', 'hypothesis']},
    data_files=[(os.path.join('share', 'rieszuncertain'),
                [os.path.join('share', 'rieszuncertain', 'loggingconfig.json')]),
                (os.path.join('share', 'rieszuncertain', 'scenarios'),
                sorted(glob.glob(os.path.join('share', 'rieszuncertain', 'scenarios', '*.json'))))],
    license='LICENSE.txt',
    classifiers=['Intended Audience :: Developers',
                 'Intended Audience :: Science/Research',
                 'Operating System :: OS Independent',
                 'Programming Language :: Python :: 3.8',
                 'Programming Language :: Python :: 3.9',
                 'Programming Language :: Python :: 3.10',
                 'Programming Language :: Python :: 3.11'])
