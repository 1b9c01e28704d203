#!/usr/bin/env python
"""
RieszUncertain - finite uncertainty spaces, uncertain variables and uncertain
sequences, with exact measures, uncertainty distributions and expected values.
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
# Purpose:  Uncertainty spaces over a finite ground set. The uncertainty
#           measure is stored extensionally as an array indexed by the
#           bitmask of each subset (bit i set <=> atom i in the event).
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

from rieszuncertain.rieszuncertainutils import RieszUncertainInputException
from rieszuncertain.rieszuncertainutils import ValidationReport
from rieszuncertain.rieszuncertainutils import get_max_atoms

logger = logging.getLogger(__name__)

AXIOM_TOLERANCE = 1e-12


def _all_masks(n_atoms):
    return numpy.arange(1 << n_atoms, dtype=numpy.int64)


class UncertaintySpace(object):
    """
    A finite uncertainty space (Gamma, power set, M) with an almost sure set
    Lambda. Instances are immutable: the measure table is read-only.
    """

    def __init__(self, atoms, measure_table, almost_sure=None, kind="explicit"):
        """
        :param atoms: list of unique atom names.
        :param measure_table: array_like of length 2^m, M of the subset with
                              bitmask i at index i.
        :param almost_sure: optional list of atom names forming Lambda
                            (default: all atoms).
        :param kind: the name of the constructor used (for reports).
        """
        atoms = [str(atom) for atom in atoms]
        if len(atoms) < 1:
            raise RieszUncertainInputException("An uncertainty space needs at least one atom.")
        if len(set(atoms)) != len(atoms):
            raise RieszUncertainInputException("Atom names must be unique: {}".format(atoms))
        max_atoms = get_max_atoms()
        if len(atoms) > max_atoms:
            raise RieszUncertainInputException("{} atoms exceeds the maximum of {} "
                                               "(RIESZ_UNCERTAIN_MAX_ATOMS).".format(len(atoms), max_atoms))
        table = numpy.array(measure_table, dtype=float)
        if table.shape != (1 << len(atoms),):
            raise RieszUncertainInputException("The measure table must have 2^{} = {} entries, not {}.".format(
                len(atoms), 1 << len(atoms), table.shape))
        if not numpy.all(numpy.isfinite(table)):
            raise RieszUncertainInputException("The measure table contains non-finite values.")
        table.setflags(write=False)

        self.atoms = tuple(atoms)
        self.kind = kind
        self._index = dict((atom, i) for i, atom in enumerate(self.atoms))
        self._table = table
        self._bits = numpy.left_shift(numpy.int64(1), numpy.arange(len(atoms), dtype=numpy.int64))
        if almost_sure is None:
            self.almost_sure_mask = self.full_mask
        else:
            self.almost_sure_mask = self.event_mask(almost_sure)
        self._almost_sure_cols = numpy.array([(self.almost_sure_mask >> i) & 1 == 1
                                              for i in range(len(atoms))], dtype=bool)

    @classmethod
    def from_additive(cls, atoms, weights, almost_sure=None):
        """
        A probability measure from nonnegative atom weights (normalised to sum
        to one). M(E^c) is stored as 1 - M(E) so duality holds exactly.
        """
        weights = numpy.asarray(weights, dtype=float)
        if weights.shape != (len(atoms),):
            raise RieszUncertainInputException("One weight per atom is required.")
        if numpy.any(weights < 0) or (not numpy.all(numpy.isfinite(weights))):
            raise RieszUncertainInputException("Additive weights must be finite and nonnegative.")
        total = math.fsum(weights)
        if total <= 0:
            raise RieszUncertainInputException("Additive weights must not all be zero.")
        weights = weights / total
        n_atoms = len(atoms)
        masks = _all_masks(n_atoms)
        table = numpy.zeros(masks.shape[0], dtype=float)
        for i in range(n_atoms):
            table += numpy.where((masks >> i) & 1 == 1, weights[i], 0.0)
        full = (1 << n_atoms) - 1
        upper = (masks >> (n_atoms - 1)) & 1 == 1
        table[upper] = 1.0 - table[full ^ masks[upper]]
        return cls(atoms, table, almost_sure=almost_sure, kind="additive")

    @classmethod
    def from_possibility(cls, atoms, weights, dual=True, almost_sure=None):
        """
        A possibility-style measure from atom weights in [0, 1].

        With dual=False, M(E) = max of the weights on E. With dual=True the
        measure is completed by the maximum uncertainty rule:
            M(E) = sup_E w        if sup_E w < 0.5
                 = 1 - sup_E^c w  if sup_E^c w < 0.5
                 = 0.5            otherwise,
        which needs at least one weight of 0.5 or more.
        """
        weights = numpy.asarray(weights, dtype=float)
        if weights.shape != (len(atoms),):
            raise RieszUncertainInputException("One weight per atom is required.")
        if numpy.any(weights < 0) or numpy.any(weights > 1) or (not numpy.all(numpy.isfinite(weights))):
            raise RieszUncertainInputException("Possibility weights must lie in [0, 1].")
        n_atoms = len(atoms)
        masks = _all_masks(n_atoms)
        sup = numpy.zeros(masks.shape[0], dtype=float)
        for i in range(n_atoms):
            sup = numpy.maximum(sup, numpy.where((masks >> i) & 1 == 1, weights[i], 0.0))
        if not dual:
            return cls(atoms, sup, almost_sure=almost_sure, kind="possibility")

        if weights.max() < 0.5:
            raise RieszUncertainInputException("The dual possibility measure needs a weight of at least 0.5.")
        full = (1 << n_atoms) - 1
        sup_comp = sup[full ^ masks]
        table = numpy.where(sup < 0.5, sup, numpy.where(sup_comp < 0.5, 1.0 - sup_comp, 0.5))
        table[0] = 0.0
        table[full] = 1.0
        return cls(atoms, table, almost_sure=almost_sure, kind="possibility-dual")

    @classmethod
    def from_table(cls, atoms, entries, almost_sure=None):
        """
        An explicit measure from (subset, value) entries. The empty set
        defaults to 0 and the full set to 1; every other subset is required.
        :param entries: iterable of (list of atom names, value) pairs.
        """
        atoms = [str(atom) for atom in atoms]
        index = dict((atom, i) for i, atom in enumerate(atoms))
        n_atoms = len(atoms)
        table = numpy.full(1 << n_atoms, numpy.nan)
        for subset, value in entries:
            mask = 0
            for atom in subset:
                if str(atom) not in index:
                    raise RieszUncertainInputException("Unknown atom '{}' in measure table.".format(atom))
                mask |= 1 << index[str(atom)]
            table[mask] = float(value)
        if numpy.isnan(table[0]):
            table[0] = 0.0
        full = (1 << n_atoms) - 1
        if numpy.isnan(table[full]):
            table[full] = 1.0
        missing = numpy.nonzero(numpy.isnan(table))[0]
        if missing.shape[0] > 0:
            first = [atoms[i] for i in range(n_atoms) if (int(missing[0]) >> i) & 1 == 1]
            raise RieszUncertainInputException("The measure table is missing {} subsets (first: {}).".format(
                missing.shape[0], first))
        return cls(atoms, table, almost_sure=almost_sure, kind="explicit")

    @property
    def n_atoms(self):
        return len(self.atoms)

    @property
    def full_mask(self):
        return (1 << len(self.atoms)) - 1

    @property
    def table(self):
        return self._table

    @property
    def almost_sure_columns(self):
        """Boolean vector selecting the atoms of Lambda."""
        return self._almost_sure_cols

    def atom_index(self, atom):
        try:
            return self._index[str(atom)]
        except KeyError:
            raise RieszUncertainInputException("Unknown atom '{}'.".format(atom))

    def event_mask(self, event):
        """
        :param event: iterable of atom names.
        :return: int bitmask of the event.
        """
        mask = 0
        for atom in event:
            mask |= 1 << self.atom_index(atom)
        return mask

    def event_atoms(self, mask):
        return [atom for i, atom in enumerate(self.atoms) if (int(mask) >> i) & 1 == 1]

    def masks_from_bool(self, events):
        """
        Convert boolean event indicators (last axis over atoms) into bitmasks.
        :param events: bool array of shape (..., m).
        :return: int64 array of shape (...).
        """
        events = numpy.asarray(events, dtype=bool)
        return numpy.dot(events.astype(numpy.int64), self._bits)

    def measure_of_mask(self, mask):
        return float(self._table[int(mask)])

    def measure_of_masks(self, masks):
        return self._table[numpy.asarray(masks, dtype=numpy.int64)]

    def __repr__(self):
        return "UncertaintySpace(kind={}, atoms={})".format(self.kind, list(self.atoms))


class UncertainVariable(object):
    """
    A real function on the atoms of an uncertainty space.
    """

    def __init__(self, space, values):
        """
        :param space: UncertaintySpace
        :param values: sequence of one value per atom, or a dict atom -> value.
        """
        if isinstance(values, dict):
            arr = numpy.full(space.n_atoms, numpy.nan)
            for atom, val in values.items():
                arr[space.atom_index(atom)] = float(val)
            if numpy.any(numpy.isnan(arr)):
                raise RieszUncertainInputException("An uncertain variable must be defined on every atom.")
        else:
            arr = numpy.array(values, dtype=float)
            if arr.ndim == 0:
                arr = numpy.full(space.n_atoms, float(arr))
            if arr.shape != (space.n_atoms,):
                raise RieszUncertainInputException("An uncertain variable needs {} values, not {}.".format(
                    space.n_atoms, arr.shape))
        if not numpy.all(numpy.isfinite(arr)):
            raise RieszUncertainInputException("An uncertain variable must take finite values.")
        arr.setflags(write=False)
        self.space = space
        self.values = arr

    def value_at(self, atom):
        return float(self.values[self.space.atom_index(atom)])

    def apply(self, func):
        """Pointwise composition func(values)."""
        return UncertainVariable(self.space, func(self.values))

    def affine(self, scale, shift):
        return UncertainVariable(self.space, scale * self.values + shift)

    def absolute(self):
        return UncertainVariable(self.space, numpy.abs(self.values))

    def difference(self, other):
        if other.space is not self.space:
            raise RieszUncertainInputException("Uncertain variables live on different spaces.")
        return UncertainVariable(self.space, self.values - other.values)

    def __repr__(self):
        return "UncertainVariable({})".format(dict(zip(self.space.atoms, self.values.tolist())))


class UncertainSequence(object):
    """
    An uncertain sequence (xi_n), n = 1..horizon, on one space, with the
    limit candidate xi against which gaps are measured. Terms come either from
    a rule n -> values or from a precomputed (horizon x m) array.
    """

    def __init__(self, space, limit, horizon, term=None, values=None, name=None):
        if int(horizon) < 1:
            raise RieszUncertainInputException("The horizon must be at least 1.")
        if (term is None) == (values is None):
            raise RieszUncertainInputException("Provide exactly one of 'term' or 'values'.")
        self.space = space
        self.horizon = int(horizon)
        self.name = name
        if isinstance(limit, UncertainVariable):
            self.limit = limit
        else:
            self.limit = UncertainVariable(space, limit)
        self._term = term
        self._values = None
        if values is not None:
            arr = numpy.array(values, dtype=float)
            if arr.shape != (self.horizon, space.n_atoms):
                raise RieszUncertainInputException("Sequence values must have shape ({}, {}), not {}.".format(
                    self.horizon, space.n_atoms, arr.shape))
            if not numpy.all(numpy.isfinite(arr)):
                raise RieszUncertainInputException("Sequence values must be finite.")
            arr.setflags(write=False)
            self._values = arr

    def check_index(self, n):
        if (int(n) != n) or (n < 1) or (n > self.horizon):
            raise RieszUncertainInputException("Index {} is outside 1..{}.".format(n, self.horizon))
        return int(n)

    def term_at(self, n):
        n = self.check_index(n)
        if self._values is not None:
            return UncertainVariable(self.space, self._values[n - 1])
        term = self._term(n)
        if isinstance(term, UncertainVariable):
            if term.space is not self.space:
                raise RieszUncertainInputException("Term {} lives on a different space.".format(n))
            return term
        return UncertainVariable(self.space, term)

    def as_array(self):
        """
        All terms as a read-only (horizon x m) array, computed once.
        """
        if self._values is None:
            logger.debug("Evaluating {} terms of sequence '{}'.".format(self.horizon, self.name))
            arr = numpy.empty((self.horizon, self.space.n_atoms), dtype=float)
            for n in range(1, self.horizon + 1):
                arr[n - 1] = self.term_at(n).values
            arr.setflags(write=False)
            self._values = arr
        return self._values

    def __repr__(self):
        return "UncertainSequence(name={}, horizon={}, space={})".format(self.name, self.horizon, self.space)


def _subset_enumeration(complement_mask, n_atoms):
    subs = numpy.zeros(1, dtype=numpy.int64)
    for i in range(n_atoms):
        if (complement_mask >> i) & 1 == 1:
            subs = numpy.concatenate([subs, subs | (1 << i)])
    return subs


def validate_space(space):
    """
    Check Liu's axioms on the stored measure: range, normality,
    monotonicity, duality, sub-additivity and M(Lambda) = 1. Finite
    sub-additivity follows from the check over disjoint pairs together with
    monotonicity, so pairs of disjoint subsets are enumerated (3^m pairs).

    :param space: UncertaintySpace
    :return: ValidationReport
    """
    report = ValidationReport("space")
    table = space.table
    n_atoms = space.n_atoms
    full = space.full_mask
    masks = _all_masks(n_atoms)

    bad = numpy.nonzero((table < 0.0) | (table > 1.0))[0]
    report.add_check("range", bad.shape[0] == 0,
                     None if bad.shape[0] == 0 else (space.event_atoms(bad[0]), float(table[bad[0]])))

    normal = (table[0] == 0.0) and (abs(table[full] - 1.0) <= AXIOM_TOLERANCE)
    report.add_check("normality", normal,
                     None if normal else {"empty": float(table[0]), "full": float(table[full])})

    witness = None
    for i in range(n_atoms):
        without = masks[(masks >> i) & 1 == 0]
        viol = numpy.nonzero(table[without] > table[without | (1 << i)] + AXIOM_TOLERANCE)[0]
        if viol.shape[0] > 0:
            small = int(without[viol[0]])
            witness = (space.event_atoms(small), space.event_atoms(small | (1 << i)))
            break
    report.add_check("monotonicity", witness is None, witness)

    dual_err = numpy.abs(table + table[full ^ masks] - 1.0)
    viol = numpy.nonzero(dual_err > AXIOM_TOLERANCE)[0]
    witness = None
    if viol.shape[0] > 0:
        witness = (space.event_atoms(viol[0]), space.event_atoms(full ^ int(viol[0])))
    report.add_check("duality", viol.shape[0] == 0, witness)

    witness = None
    for e_mask in range(1, full + 1):
        subs = _subset_enumeration(full ^ e_mask, n_atoms)
        subs = subs[subs > 0]
        if subs.shape[0] == 0:
            continue
        viol = numpy.nonzero(table[e_mask | subs] > table[e_mask] + table[subs] + AXIOM_TOLERANCE)[0]
        if viol.shape[0] > 0:
            witness = (space.event_atoms(e_mask), space.event_atoms(subs[viol[0]]))
            break
    report.add_check("subadditivity", witness is None, witness)

    as_measure = float(table[space.almost_sure_mask])
    as_ok = abs(as_measure - 1.0) <= AXIOM_TOLERANCE
    report.add_check("almost_sure", as_ok,
                     None if as_ok else (space.event_atoms(space.almost_sure_mask), as_measure))
    return report


def measure(space, event):
    """
    :param space: UncertaintySpace
    :param event: iterable of atom names.
    :return: M(event)
    """
    return space.measure_of_mask(space.event_mask(event))


def variable_values(space, var):
    if isinstance(var, UncertainVariable):
        if var.space is not space:
            raise RieszUncertainInputException("The uncertain variable lives on a different space.")
        return var.values
    arr = numpy.asarray(var, dtype=float)
    if arr.shape != (space.n_atoms,):
        raise RieszUncertainInputException("Expected {} values, got shape {}.".format(space.n_atoms, arr.shape))
    return arr


def expected_value(space, var):
    """
    E[xi] = int_0^inf M{xi >= r} dr - int_-inf^0 M{xi <= r} dr, evaluated
    exactly from the level sets of xi: both integrands are step functions
    with breakpoints at the distinct values of xi.

    :param space: UncertaintySpace
    :param var: UncertainVariable (or a vector of one value per atom).
    :return: float
    """
    vals = variable_values(space, var)
    levels = numpy.unique(vals)
    n_levels = levels.shape[0]
    terms = []
    for j in range(n_levels):
        v = float(levels[j])
        if v > 0:
            lower = 0.0 if j == 0 else max(float(levels[j - 1]), 0.0)
            upper_set = space.masks_from_bool(vals >= v)
            terms.append(space.measure_of_mask(upper_set) * (v - lower))
        elif v < 0:
            upper = 0.0 if j == n_levels - 1 else min(float(levels[j + 1]), 0.0)
            lower_set = space.masks_from_bool(vals <= v)
            terms.append(-space.measure_of_mask(lower_set) * (upper - v))
    return math.fsum(terms)


def expected_values_nonneg(space, rows):
    """
    Expected values of many nonnegative variables at once.

    :param space: UncertaintySpace
    :param rows: (K x m) array of nonnegative values, one variable per row.
    :return: array of K expected values.
    """
    rows = numpy.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != space.n_atoms:
        raise RieszUncertainInputException("Expected a (K x {}) array.".format(space.n_atoms))
    if numpy.any(rows < 0):
        raise RieszUncertainInputException("expected_values_nonneg needs nonnegative values.")
    order = numpy.argsort(rows, axis=1, kind="stable")
    sorted_vals = numpy.take_along_axis(rows, order, axis=1)
    bits = numpy.left_shift(numpy.int64(1), order.astype(numpy.int64))
    # atoms at sorted positions j..m-1 are exactly those with value >= sorted_vals[:, j]
    suffix_masks = numpy.cumsum(bits[:, ::-1], axis=1)[:, ::-1]
    widths = numpy.diff(sorted_vals, axis=1, prepend=0.0)
    return numpy.sum(space.measure_of_masks(suffix_masks) * widths, axis=1)


def distribution_at(space, var, x):
    """
    The uncertainty distribution Phi(x) = M{xi <= x}.
    """
    vals = variable_values(space, var)
    return space.measure_of_mask(space.masks_from_bool(vals <= x))


def distribution_profile(space, rows, x_grid):
    """
    Phi evaluated for many variables over a grid.

    :param rows: (K x m) array, one variable per row.
    :param x_grid: 1D array of G points.
    :return: (K x G) array.
    """
    rows = numpy.asarray(rows, dtype=float)
    x_grid = numpy.asarray(x_grid, dtype=float)
    events = rows[:, None, :] <= x_grid[None, :, None]
    return space.measure_of_masks(space.masks_from_bool(events))
