# -*- coding: utf-8 -*-

# This file is part of VbDist.
#
# VbDist is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# VbDist is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with VbDist. If not, see <http://www.gnu.org/licenses/>.

""" Seeded generators of random smooth test data.

    All randomness of VbDist flows through makeGenerator. Random functions are low frequency
    trigonometric polynomials so that they easily satisfy the adjacent node smoothness bound.
"""
from __future__ import annotations

import logging
import zlib

from typing import List, Optional, Tuple

import numpy as np

from vbdist.bundles import ProjectorBundle
from vbdist.distributions import Atom, PointMass, Regular, ScalarDistribution, hatNodes
from vbdist.geometry import Axis, DiscreteManifold, GridFunction, TestDensity
from vbdist.info import DEFAULT_SEED
from vbdist.sections import Section
from vbdist.utils.defs import BOUNDARY_LAYERS

logger = logging.getLogger(__name__)

# Highest frequency of the random trigonometric polynomials.
MAX_FREQUENCY = 2


def makeGenerator(seed: Optional[int] = None, label: str = '') -> np.random.Generator:
    """ Creates a PCG64 random generator.

        Generators with different labels are independent of each other, so a battery of checks
        gives the same data regardless of which other batteries ran before it.

        :param seed: the run seed. Uses DEFAULT_SEED (0x5EED) if None.
        :param label: name of the battery that uses the generator.
    """
    seed = DEFAULT_SEED if seed is None else int(seed)
    if label:
        seedSequence = np.random.SeedSequence(seed, spawn_key=(zlib.crc32(label.encode('utf-8')), ))
    else:
        seedSequence = np.random.SeedSequence(seed)
    return np.random.default_rng(seedSequence)


def _axisBasis(axis: Axis, maxFrequency: int) -> np.ndarray:
    """ Low frequency basis functions along an axis, array of shape (nNodes, nBasis).
    """
    x = axis.coordinates
    columns = [np.ones_like(x)]
    for k in range(1, maxFrequency + 1):
        if axis.periodic:
            columns.append(np.cos(k * x))
            columns.append(np.sin(k * x))
        else:
            columns.append(np.cos(k * np.pi * x))
    return np.stack(columns, axis=-1)


def randomSmoothValues(m: DiscreteManifold, rng: np.random.Generator,
                       trailing: Tuple[int, ...] = (), isComplex: bool = False,
                       maxFrequency: int = MAX_FREQUENCY) -> np.ndarray:
    """ Random trigonometric polynomial values of shape (nNodes, *trailing).
    """
    bases = [_axisBasis(axis, maxFrequency) for axis in m.axes]
    coefShape = tuple(basis.shape[1] for basis in bases) + tuple(trailing)
    coefs = rng.standard_normal(coefShape)
    if isComplex:
        coefs = coefs + 1j * rng.standard_normal(coefShape)
    coefs /= np.prod([basis.shape[1] for basis in bases])

    if m.dim == 1:
        values = np.tensordot(bases[0], coefs, axes=1)
    else:
        values = np.einsum('xa,yb,ab...->xy...', bases[0], bases[1], coefs)
    return values.reshape((m.nNodes, ) + tuple(trailing))


def randomFunction(m: DiscreteManifold, rng: np.random.Generator,
                   isComplex: bool = False) -> GridFunction:
    """ A random smooth function on the manifold. """
    return GridFunction(m, randomSmoothValues(m, rng, isComplex=isComplex))


def cutoff(m: DiscreteManifold) -> np.ndarray:
    """ A C¹ window that vanishes exactly on the boundary layers and is 1 on periodic bases.
    """
    factors = []
    for axis in m.axes:
        if axis.periodic:
            factors.append(np.ones(axis.nNodes))
        else:
            # Index based, so that the zeros on the boundary layers are exact.
            idx = np.arange(axis.nNodes, dtype=float)
            first, last = BOUNDARY_LAYERS - 1, axis.nNodes - BOUNDARY_LAYERS
            bump = np.maximum(0.0, (idx - first) * (last - idx)) / (0.5 * (last - first)) ** 2
            factors.append(bump ** 2)
    window = factors[0]
    for factor in factors[1:]:
        window = np.outer(window, factor).ravel()
    return window


def randomTestDensity(m: DiscreteManifold, rng: np.random.Generator,
                      isComplex: bool = False) -> TestDensity:
    """ A random smooth test density with compact support. """
    values = randomSmoothValues(m, rng, isComplex=isComplex) * cutoff(m)
    return TestDensity(m, values)


def randomSection(bundle: ProjectorBundle, rng: np.random.Generator,
                  isComplex: bool = False) -> Section:
    """ A random smooth section: random ambient vectors projected onto the fibers. """
    values = randomSmoothValues(bundle.base, rng, trailing=(bundle.ambientDim, ),
                                isComplex=isComplex)
    return Section.project(bundle, values)


def randomPointMass(m: DiscreteManifold, rng: np.random.Generator, maxOrder: int = 1,
                    isComplex: bool = False, fixedOrder: bool = False) -> PointMass:
    """ A point mass at a random node outside the boundary layers. Orders ≥ 1 need a 1-D base.

        The order is drawn from 0..maxOrder, or is maxOrder itself if fixedOrder is True. It is
        always 0 on bases of more than one dimension.
    """
    nodes = hatNodes(m)
    node = int(nodes[rng.integers(len(nodes))])
    if m.dim != 1:
        order = 0
    elif fixedOrder:
        order = maxOrder
    else:
        order = int(rng.integers(maxOrder + 1))
    weight: complex = float(rng.standard_normal())
    if isComplex:
        weight = complex(weight, rng.standard_normal())
    return PointMass(node, order, weight)


def randomDistribution(m: DiscreteManifold, rng: np.random.Generator, nPointMasses: int = 2,
                       maxOrder: int = 1, regular: bool = True, isComplex: bool = False,
                       leadingMaxOrder: bool = False) -> ScalarDistribution:
    """ A random distribution with an optional regular part and a few point masses.

        If leadingMaxOrder is True, the first point mass has order maxOrder on 1-D bases.
    """
    atoms: List[Atom] = []
    if regular:
        atoms.append(Regular(randomFunction(m, rng, isComplex=isComplex)))
    for nr in range(nPointMasses):
        atoms.append(randomPointMass(m, rng, maxOrder=maxOrder, isComplex=isComplex,
                                     fixedOrder=leadingMaxOrder and nr == 0))
    return ScalarDistribution(m, atoms)


def randomTensorTerms(bundle: ProjectorBundle, rng: np.random.Generator, nTerms: int = 3,
                      maxOrder: int = 1, isComplex: bool = False,
                      leadingMaxOrder: bool = False) -> List[Tuple[Section, ScalarDistribution]]:
    """ Random (section, distribution) pairs for a TensorRep.

        See randomDistribution for leadingMaxOrder.
    """
    return [(randomSection(bundle, rng, isComplex=isComplex),
             randomDistribution(bundle.base, rng, maxOrder=maxOrder, isComplex=isComplex,
                                leadingMaxOrder=leadingMaxOrder))
            for _ in range(nTerms)]
