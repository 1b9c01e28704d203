#!/usr/bin/env python
"""
RieszUncertain - Orlicz functions: built-in and tabulated specifications,
validity checks on a finite grid, Orlicz moments and the Orlicz-p Riesz gap.
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
# Purpose:  Orlicz function registry and the distance used by d_R^{phi,p}.
#
# Author: RieszUncertain Developers
# Date: 18/10/2026
# Version: 1.0
#
# History:
# Version 1.0 - Created.

import logging
import math

import numpy

from rieszuncertain.rieszuncertaincore import UncertainVariable
from rieszuncertain.rieszuncertaincore import expected_value
from rieszuncertain.rieszuncertaincore import expected_values_nonneg
from rieszuncertain.rieszuncertainsummability import transform_at
from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainutils import ValidationReport

logger = logging.getLogger(__name__)

ORLICZ_KINDS = ["identity", "power", "expm1", "table"]
CONVEXITY_TOLERANCE = 1e-12


def _power_phi(exponent):
    def _phi(x):
        return numpy.power(x, exponent)
    return _phi


def _table_phi(xs, ys):
    last_slope = (ys[-1] - ys[-2]) / (xs[-1] - xs[-2])

    def _phi(x):
        x = numpy.asarray(x, dtype=float)
        out = numpy.interp(x, xs, ys)
        return numpy.where(x > xs[-1], ys[-1] + last_slope * (x - xs[-1]), out)
    return _phi


class OrliczSpec(object):
    """
    An Orlicz function phi together with the distance exponent p >= 1.
    phi must accept numpy arrays.
    """

    def __init__(self, name, phi, p=1.0, params=None):
        p = float(p)
        if not (p >= 1.0 and math.isfinite(p)):
            raise RieszUncertainInputException("The Orlicz distance exponent p must be >= 1 (got {}).".format(p))
        self.name = name
        self.phi = phi
        self.p = p
        self.params = dict(params) if params is not None else dict()

    @classmethod
    def identity(cls, p=1.0):
        return cls("identity", lambda x: numpy.asarray(x, dtype=float), p=p)

    @classmethod
    def power(cls, exponent, p=1.0):
        exponent = float(exponent)
        if exponent < 1.0:
            raise RieszUncertainInputException("phi(x) = x^s is an Orlicz function only for s >= 1.")
        return cls("power", _power_phi(exponent), p=p, params={"exponent": exponent})

    @classmethod
    def expm1(cls, p=1.0):
        return cls("expm1", numpy.expm1, p=p)

    @classmethod
    def table(cls, breakpoints, p=1.0):
        """
        A tabulated phi: linear interpolation between (x, y) breakpoints and
        extrapolation with the last slope. Validated on construction.
        """
        pts = numpy.asarray(breakpoints, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise RieszUncertainInputException("A tabulated phi needs at least two [x, y] breakpoints.")
        xs = pts[:, 0]
        ys = pts[:, 1]
        if numpy.any(numpy.diff(xs) <= 0):
            raise RieszUncertainInputException("Breakpoint abscissae must be strictly increasing.")
        spec = cls("table", _table_phi(xs, ys), p=p, params={"breakpoints": pts.tolist()})
        report = validate_orlicz(spec, grid_max=max(100.0, float(xs[-1])))
        if not report.is_valid():
            raise RieszUncertainInputException("The tabulated phi is not an Orlicz function: {}".format(
                report.failed_checks()))
        return spec

    @property
    def is_identity(self):
        return self.name == "identity"

    def __call__(self, x):
        return self.phi(x)

    def __repr__(self):
        return "OrliczSpec(name={}, p={}, params={})".format(self.name, self.p, self.params)


def validate_orlicz(spec, grid_max=100.0, grid_points=256):
    """
    Check on the grid 0 = x_0 < ... < x_{G-1} = grid_max that phi(0) = 0,
    phi is strictly increasing, midpoint convex over every grid pair and
    still growing (phi(grid_max) > phi(grid_max / 2)). The convexity
    tolerance is 1e-12 relative to the magnitude of the values compared.

    :param spec: OrliczSpec
    :param grid_max: right end of the grid.
    :param grid_points: number of grid points, >= 16.
    :return: ValidationReport
    """
    if grid_points < 16:
        raise RieszUncertainInputException("validate_orlicz needs at least 16 grid points.")
    if not grid_max > 0:
        raise RieszUncertainInputException("grid_max must be positive.")
    grid = numpy.linspace(0.0, float(grid_max), int(grid_points))
    vals = numpy.asarray(spec(grid), dtype=float)
    mids = numpy.asarray(spec((grid[:, None] + grid[None, :]) / 2.0), dtype=float)
    ends = numpy.asarray(spec(numpy.array([grid_max / 2.0, grid_max])), dtype=float)
    if not (numpy.all(numpy.isfinite(vals)) and numpy.all(numpy.isfinite(mids))
            and numpy.all(numpy.isfinite(ends))):
        raise RieszUncertainInputException("phi '{}' is not finite on [0, {}].".format(spec.name, grid_max))

    report = ValidationReport("orlicz")
    report.add_check("zero_at_origin", vals[0] == 0.0, None if vals[0] == 0.0 else float(vals[0]))

    steps = numpy.diff(vals)
    bad = numpy.nonzero(steps <= 0)[0]
    report.add_check("strictly_increasing", bad.shape[0] == 0,
                     None if bad.shape[0] == 0 else (float(grid[bad[0]]), float(grid[bad[0] + 1])))

    chord = (vals[:, None] + vals[None, :]) / 2.0
    scale = numpy.maximum(1.0, numpy.abs(chord))
    viol = numpy.argwhere(mids > chord + CONVEXITY_TOLERANCE * scale)
    witness = None
    if viol.shape[0] > 0:
        i, j = viol[0]
        witness = (float(grid[i]), float(grid[j]))
    report.add_check("midpoint_convex", witness is None, witness)

    growing = ends[1] > ends[0]
    report.add_check("unbounded_trend", growing, None if growing else (float(ends[0]), float(ends[1])))
    return report


def orlicz_moment(space, var, spec):
    """
    E[phi(|var|)].
    """
    if isinstance(var, UncertainVariable):
        vals = var.values
    else:
        vals = numpy.asarray(var, dtype=float)
    return expected_value(space, numpy.asarray(spec(numpy.abs(vals)), dtype=float))


def orlicz_p_gap(seq, weights, spec, n):
    """
    (E[phi(|nu_n - xi|^p)])^(1/p) for the Riesz transform nu_n of seq and its
    limit candidate xi.
    """
    nu = transform_at(seq, weights, n)
    dev = numpy.abs(nu.values - seq.limit.values)
    moment = expected_value(seq.space, numpy.asarray(spec(numpy.power(dev, spec.p)), dtype=float))
    return max(moment, 0.0) ** (1.0 / spec.p)


def orlicz_p_gap_profile(space, deviations, spec):
    """
    The Orlicz-p gap for every row of a nonnegative (K x m) deviation array.
    """
    phis = numpy.asarray(spec(numpy.power(deviations, spec.p)), dtype=float)
    moments = expected_values_nonneg(space, numpy.maximum(phis, 0.0))
    return numpy.power(moments, 1.0 / spec.p)
