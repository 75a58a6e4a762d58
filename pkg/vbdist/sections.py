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

""" Smooth sections of projector bundles and the C∞(M)-module structure.
"""
from __future__ import annotations

import logging

from typing import Any, List, Sequence, Union

import numpy as np

from vbdist.bundles import (BundleMorphism, ProjectorBundle, checkIsDualPair, checkSameBundle,
                            dual, externalTensor, frameGenerators, tensor)
from vbdist.geometry import DiscreteManifold, GridFunction, checkSameBase, isSmooth
from vbdist.utils.cls import asNumberArray, checkArrayShape, checkType, readOnly
from vbdist.utils.defs import PROJECTOR_TOL, BundleMismatchError, FiberError

logger = logging.getLogger(__name__)


class Section():
    """ A section of a projector bundle: one ambient vector v(x) per node with P(x)v(x) = v(x).
    """
    __array_ufunc__ = None

    def __init__(self, bundle: ProjectorBundle, values: Any):
        """ Constructor

            :param bundle: the bundle the section belongs to.
            :param values: array of shape (nNodes, ambientDim).

            Raises a FiberError if the values do not lie in the fibers of the bundle.
        """
        checkType(bundle, ProjectorBundle)
        values = asNumberArray(values)
        checkArrayShape(values, (bundle.base.nNodes, bundle.ambientDim), name='section values')

        if values.size:
            residue = np.einsum('xij,xj->xi', bundle.proj, values) - values
            fiberError = float(np.max(np.abs(residue)))
            scale = max(1.0, float(np.max(np.abs(values))))
            if fiberError > PROJECTOR_TOL * scale:
                raise FiberError("Values leave the fibers of {!r}, max error {:.3g}"
                                 .format(bundle, fiberError))

        self._bundle = bundle
        self._values = readOnly(values.copy())


    @classmethod
    def project(cls, bundle: ProjectorBundle, values: Any) -> Section:
        """ Creates a section by applying the projector to arbitrary ambient vectors.
        """
        values = asNumberArray(values)
        return cls(bundle, np.einsum('xij,xj->xi', bundle.proj, values))


    @classmethod
    def zero(cls, bundle: ProjectorBundle) -> Section:
        """ The zero section. """
        return cls(bundle, np.zeros((bundle.base.nNodes, bundle.ambientDim)))


    def __repr__(self) -> str:
        return "<Section of {}>".format(self._bundle.label)

    @property
    def bundle(self) -> ProjectorBundle:
        """ The bundle the section belongs to. """
        return self._bundle

    @property
    def base(self) -> DiscreteManifold:
        """ The base manifold of the bundle. """
        return self._bundle.base

    @property
    def values(self) -> np.ndarray:
        """ Read-only array of shape (nNodes, ambientDim). """
        return self._values


    def component(self, i: int) -> GridFunction:
        """ Ambient component i as a function on the base. """
        return GridFunction(self.base, self._values[:, i])


    def isSmooth(self, constant: float) -> bool:
        """ True if adjacent node values differ by at most constant·h. """
        return isSmooth(self.base, self._values, constant)


    def isCompactlySupported(self) -> bool:
        """ True if the section vanishes on the boundary layers of non-periodic axes. """
        return not np.any(self._values[self.base.boundaryMask()])


    def __add__(self, other: Section) -> Section:
        checkType(other, Section)
        checkSameBundle(self._bundle, other.bundle)
        return Section(self._bundle, self._values + other.values)

    def __sub__(self, other: Section) -> Section:
        checkType(other, Section)
        checkSameBundle(self._bundle, other.bundle)
        return Section(self._bundle, self._values - other.values)

    def __neg__(self) -> Section:
        return Section(self._bundle, -self._values)

    def __mul__(self, other: Union[complex, GridFunction]) -> Section:
        return modMul(other, self)

    __rmul__ = __mul__



def modMul(f: Union[complex, GridFunction], s: Section) -> Section:
    """ Module multiplication C∞(M) × Γ(M,E) → Γ(M,E): node-wise scaling.

        Also accepts a constant.
    """
    checkType(s, Section)
    if isinstance(f, GridFunction):
        checkSameBase(f.base, s.base)
        return Section(s.bundle, f.values[:, np.newaxis] * s.values)
    else:
        return Section(s.bundle, f * s.values)


def contract(s: Section, t: Section) -> GridFunction:
    """ Node-wise pairing of a section of E with a section of E*.

        Raises a BundleMismatchError if t is not a section of the dual of the bundle of s.
    """
    checkType(s, Section)
    checkType(t, Section)
    checkIsDualPair(s.bundle, t.bundle)
    return GridFunction(s.base, np.einsum('xi,xi->x', s.values, t.values))


def fiberwiseTensor(s: Section, t: Section, external: bool = False) -> Section:
    """ The fiberwise tensor product ψ(s ⊗ t).

        For sections on the same base this is x ↦ s(x) ⊗ t(x), a section of E ⊗ F. With
        external=True, or when the bases differ, this is (x, y) ↦ s(x) ⊗ t(y), a section of
        E ⊠ F over the product base.
    """
    checkType(s, Section)
    checkType(t, Section)
    if external or s.base != t.base:
        bundle = externalTensor(s.bundle, t.bundle)
        values = np.einsum('xa,yb->xyab', s.values, t.values)
    else:
        bundle = tensor(s.bundle, t.bundle)
        values = np.einsum('xa,xb->xab', s.values, t.values)
    return Section(bundle, values.reshape(bundle.base.nNodes, bundle.ambientDim))


def pushforward(mu: BundleMorphism, s: Section) -> Section:
    """ The pushforward μ_* s: node-wise A(x)·v(x).
    """
    checkType(mu, BundleMorphism)
    checkType(s, Section)
    checkSameBundle(mu.source, s.bundle)
    return Section(mu.target, np.einsum('xij,xj->xi', mu.maps, s.values))


def pullbackDual(mu: BundleMorphism, t: Section) -> Section:
    """ The pullback μ^* t of a section of the dual of the target: node-wise Aᵀ(x)·w(x).

        The result is a section of the dual of the source, so that
        contract(pullbackDual(mu, t), s) == contract(t, pushforward(mu, s)).
    """
    checkType(mu, BundleMorphism)
    checkType(t, Section)
    checkIsDualPair(mu.target, t.bundle)
    return Section(dual(mu.source), np.einsum('xji,xj->xi', mu.maps, t.values))


def generatorCoefficients(s: Section) -> List[GridFunction]:
    """ The coefficients s_i of s with respect to the frame generators: its ambient components.
    """
    return [s.component(i) for i in range(s.bundle.ambientDim)]


def combineGenerators(e: ProjectorBundle, coefficients: Sequence[GridFunction]) -> Section:
    """ Returns Σ_i c_i·e_i for the frame generators e_i of the bundle.
    """
    generators = frameGenerators(e)
    if len(coefficients) != len(generators):
        raise BundleMismatchError("Expected {} coefficients, got {}"
                                  .format(len(generators), len(coefficients)))
    values = np.zeros((e.base.nNodes, e.ambientDim),
                      dtype=np.result_type(*[c.values for c in coefficients], np.float64))
    for coef, gen in zip(coefficients, generators):
        checkSameBase(e.base, coef.base)
        values += coef.values[:, np.newaxis] * gen.values
    return Section(e, values)
