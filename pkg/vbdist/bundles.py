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

""" Vector bundles as smooth orthogonal projector fields in a trivial ambient bundle.

    A bundle E over a manifold M with ambient dimension n is given by a symmetric idempotent
    n×n matrix P(x) per node. The fiber E_x is the range of P(x). Every bundle therefore comes with
    a trivialization: the complement with projector I − P makes E ⊕ F trivial, and the inclusion
    and projection of E in its ambient bundle are both given by P.

    Under the symmetric projector convention E and E* have the same matrices. The dual bundle is
    distinguished by its isDual flag so that contraction only pairs a bundle with its dual.
"""
from __future__ import annotations

import logging

from typing import Any, List, Optional, Union

import numpy as np

from vbdist.geometry import DiscreteManifold, GridFunction, checkSameBase, product, smoothnessRatio
from vbdist.utils.cls import asNumberArray, checkArrayShape, checkType, readOnly
from vbdist.utils.defs import (DEFAULT_SMOOTHNESS_CONSTANT, PROJECTOR_TOL, RANK_TOL,
                               BundleMismatchError, ConsistencyError, FiberError,
                               InvalidInputError)

logger = logging.getLogger(__name__)


def _maxAbs(array: np.ndarray) -> float:
    """ Max of the absolute values. Returns 0 for empty arrays. """
    return float(np.max(np.abs(array))) if array.size else 0.0


class ProjectorBundle():
    """ A vector bundle realized as the range of a projector field.

        Validated on construction: P must be idempotent, symmetric, of constant rank and must
        vary slowly between adjacent nodes.
    """
    def __init__(self,
                 base: DiscreteManifold,
                 proj: Any,
                 isDual: bool = False,
                 label: str = '',
                 smoothnessConstant: float = DEFAULT_SMOOTHNESS_CONSTANT):
        """ Constructor

            :param base: the manifold the bundle lives on.
            :param proj: array of shape (nNodes, n, n) with the projector per node.
            :param isDual: True if the bundle is to be contracted with sections of its pre-dual.
            :param label: descriptive name used in log messages and reports.
            :param smoothnessConstant: C in the bound ‖P(x_{k+1}) − P(x_k)‖ ≤ C·h.
        """
        checkType(base, DiscreteManifold)
        proj = asNumberArray(proj, name='proj')
        if proj.dtype.kind == 'c':
            raise InvalidInputError("Projector fields must be real")
        checkArrayShape(proj, (base.nNodes, None, None), name='projector field')
        if proj.shape[1] != proj.shape[2]:
            raise InvalidInputError("Projector field must have shape ({}, n, n), got: {}"
                                    .format(base.nNodes, proj.shape))

        self._base = base
        self._proj = readOnly(proj.copy())
        self._isDual = bool(isDual)
        self._label = label or "bundle(n={})".format(proj.shape[1])
        self._smoothnessConstant = smoothnessConstant

        # Back references so that complement and dual are exact involutions.
        self._complement: Optional[ProjectorBundle] = None
        self._dual: Optional[ProjectorBundle] = None

        self._rank = self._validate()
        # Exactly symmetric, so that the fibers of E and E* compare equal.
        self._proj = readOnly(0.5 * (self._proj + np.swapaxes(self._proj, 1, 2)))


    def _validate(self) -> int:
        """ Checks the projector invariants and returns the rank.
        """
        proj = self._proj
        idemError = _maxAbs(np.matmul(proj, proj) - proj)
        if idemError > PROJECTOR_TOL:
            raise ConsistencyError("{}: projector not idempotent, max error {:.3g}"
                                   .format(self._label, idemError))

        symError = _maxAbs(proj - np.swapaxes(proj, 1, 2))
        if symError > PROJECTOR_TOL:
            raise ConsistencyError("{}: projector not symmetric, max error {:.3g}"
                                   .format(self._label, symError))

        traces = np.trace(proj, axis1=1, axis2=2)
        rank = int(np.rint(traces[0])) if traces.size else 0
        rankError = _maxAbs(traces - rank)
        if rankError > RANK_TOL:
            raise ConsistencyError("{}: rank not constant, trace deviates {:.3g} from {}"
                                   .format(self._label, rankError, rank))

        ratio = smoothnessRatio(self._base, proj)
        if ratio > self._smoothnessConstant:
            raise ConsistencyError("{}: projector field not smooth, |ΔP|/h = {:.3g} > {}"
                                   .format(self._label, ratio, self._smoothnessConstant))
        return rank


    def __repr__(self) -> str:
        return "<ProjectorBundle: {} over {}, rank {}{}>".format(
            self._label, self._base.label, self._rank, ", dual" if self._isDual else "")


    @property
    def base(self) -> DiscreteManifold:
        """ The manifold the bundle lives on. """
        return self._base

    @property
    def proj(self) -> np.ndarray:
        """ Read-only array of shape (nNodes, ambientDim, ambientDim). """
        return self._proj

    @property
    def ambientDim(self) -> int:
        """ Dimension n of the trivial ambient bundle. """
        return self._proj.shape[1]

    @property
    def rank(self) -> int:
        """ Fiber dimension. """
        return self._rank

    @property
    def isDual(self) -> bool:
        """ True for dual bundles. """
        return self._isDual

    @property
    def label(self) -> str:
        """ Descriptive name, e.g. 'complement(mobius)'. """
        return self._label

    @property
    def smoothnessConstant(self) -> float:
        """ Constant of the adjacent node smoothness bound. """
        return self._smoothnessConstant


    def sameFibers(self, other: ProjectorBundle) -> bool:
        """ Returns True if other has the same base and exactly the same projector field.
        """
        if self is other:
            return True
        return (self._base == other.base and self.ambientDim == other.ambientDim and
                bool(np.array_equal(self._proj, other.proj)))


    def __eq__(self, other: Any) -> bool:
        return (isinstance(other, ProjectorBundle) and self._isDual == other.isDual and
                self.sameFibers(other))


    def __hash__(self) -> int:
        return hash((self._base, self.ambientDim, self._rank, self._isDual))



def checkSameBundle(e: ProjectorBundle, f: ProjectorBundle) -> None:
    """ Raises a BundleMismatchError unless e and f are the same bundle.
    """
    if e != f:
        raise BundleMismatchError("Bundle mismatch: {!r} != {!r}".format(e, f))


def checkIsDualPair(e: ProjectorBundle, f: ProjectorBundle) -> None:
    """ Raises a BundleMismatchError unless f is the dual of e.
    """
    if e.isDual == f.isDual or not e.sameFibers(f):
        raise BundleMismatchError("{!r} is not the dual of {!r}".format(f, e))


##################
# Constructions #
##################


def trivialBundle(m: DiscreteManifold, r: int) -> ProjectorBundle:
    """ The trivial bundle M × 𝕂^r. Its projector is the identity everywhere.
    """
    if r < 0:
        raise InvalidInputError("Rank must be non-negative, got: {}".format(r))
    proj = np.broadcast_to(np.eye(r), (m.nNodes, r, r))
    return ProjectorBundle(m, proj, label="trivial({})".format(r))


def mobius(m: DiscreteManifold) -> ProjectorBundle:
    """ The Möbius line bundle over a circle: P(θ) = v vᵀ with v = (cos θ/2, sin θ/2).

        The projector is periodic because it is invariant under v ↦ −v.
    """
    if m.dim != 1 or not m.periodic[0]:
        raise InvalidInputError("The Möbius bundle needs a periodic 1-D base, got: {}"
                                .format(m.label))
    half = 0.5 * m.coordinate(0)
    v = np.stack([np.cos(half), np.sin(half)], axis=-1)
    proj = np.einsum('xi,xj->xij', v, v)
    return ProjectorBundle(m, proj, label="mobius")


def complement(e: ProjectorBundle) -> ProjectorBundle:
    """ The bundle with projector I − P, so that E ⊕ complement(E) is trivial.

        complement(complement(e)) returns e itself.
    """
    if e._complement is None:
        identity = np.eye(e.ambientDim)
        comp = ProjectorBundle(e.base, identity - e.proj, isDual=e.isDual,
                               label="complement({})".format(e.label),
                               smoothnessConstant=e.smoothnessConstant)
        comp._complement = e
        e._complement = comp
    return e._complement


def dual(e: ProjectorBundle) -> ProjectorBundle:
    """ The dual bundle E* with projector Pᵀ. dual(dual(e)) returns e itself.
    """
    if e._dual is None:
        label = e.label[:-1] if e.isDual and e.label.endswith('*') else e.label + '*'
        dualBundle = ProjectorBundle(e.base, np.swapaxes(e.proj, 1, 2), isDual=not e.isDual,
                                     label=label, smoothnessConstant=e.smoothnessConstant)
        dualBundle._dual = e
        e._dual = dualBundle
    return e._dual


def _blockDiagonal(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ Node-wise block diagonal matrices from two stacks of matrices.
    """
    nNodes = a.shape[0]
    result = np.zeros((nNodes, a.shape[1] + b.shape[1], a.shape[2] + b.shape[2]))
    result[:, :a.shape[1], :a.shape[2]] = a
    result[:, a.shape[1]:, a.shape[2]:] = b
    return result


def _kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ Node-wise Kronecker product of two stacks of matrices on the same nodes.
    """
    nNodes = a.shape[0]
    kron = np.einsum('xij,xkl->xikjl', a, b)
    return kron.reshape(nNodes, a.shape[1] * b.shape[1], a.shape[2] * b.shape[2])


def _combinedDuality(e: ProjectorBundle, f: ProjectorBundle) -> bool:
    """ Duality flag of a bundle built from e and f. Mixed input gives a primal bundle.
    """
    return e.isDual and f.isDual


def whitneySum(e: ProjectorBundle, f: ProjectorBundle) -> ProjectorBundle:
    """ The fiberwise direct sum E ⊕ F with a block diagonal projector.
    """
    checkSameBase(e.base, f.base)
    return ProjectorBundle(e.base, _blockDiagonal(e.proj, f.proj),
                           isDual=_combinedDuality(e, f),
                           label="{} + {}".format(e.label, f.label),
                           smoothnessConstant=max(e.smoothnessConstant, f.smoothnessConstant))


def tensor(e: ProjectorBundle, f: ProjectorBundle) -> ProjectorBundle:
    """ The fiberwise tensor product E ⊗ F with projector P_E(x) ⊗ P_F(x).
    """
    checkSameBase(e.base, f.base)
    return ProjectorBundle(e.base, _kron(e.proj, f.proj),
                           isDual=_combinedDuality(e, f),
                           label="{} (x) {}".format(e.label, f.label),
                           smoothnessConstant=max(e.smoothnessConstant, f.smoothnessConstant))


def externalTensor(e: ProjectorBundle, f: ProjectorBundle) -> ProjectorBundle:
    """ The external tensor product E ⊠ F over M × N with projector P_E(x) ⊗ P_F(y).

        The ambient index of E ⊠ F is a·n_F + b for ambient indices a of E and b of F.
    """
    base = product(e.base, f.base)
    nE, nF = e.ambientDim, f.ambientDim
    kron = np.einsum('xij,ykl->xyikjl', e.proj, f.proj)
    proj = kron.reshape(base.nNodes, nE * nF, nE * nF)
    return ProjectorBundle(base, proj, isDual=_combinedDuality(e, f),
                           label="{} [x] {}".format(e.label, f.label),
                           smoothnessConstant=max(e.smoothnessConstant, f.smoothnessConstant))


#############
# Morphisms #
#############


class BundleMorphism():
    """ A vector bundle homomorphism covering the identity of the base.

        Given by a matrix A(x) per node of shape (target ambient) × (source ambient) with
        A = P_target · A · P_source.
    """
    def __init__(self, source: ProjectorBundle, target: ProjectorBundle, maps: Any,
                 label: str = ''):
        checkType(source, ProjectorBundle)
        checkType(target, ProjectorBundle)
        checkSameBase(source.base, target.base)

        maps = asNumberArray(maps, name='maps')
        checkArrayShape(maps, (source.base.nNodes, target.ambientDim, source.ambientDim),
                        name='morphism matrices')

        sandwich = np.matmul(np.matmul(target.proj, maps), source.proj)
        fiberError = _maxAbs(sandwich - maps)
        if fiberError > PROJECTOR_TOL * max(1.0, _maxAbs(maps)):
            raise FiberError("Morphism does not respect the fibers, max error {:.3g}"
                             .format(fiberError))

        self._source = source
        self._target = target
        self._maps = readOnly(maps.copy())
        self._label = label or "{} -> {}".format(source.label, target.label)


    def __repr__(self) -> str:
        return "<BundleMorphism: {}>".format(self._label)

    @property
    def source(self) -> ProjectorBundle:
        """ Source bundle. """
        return self._source

    @property
    def target(self) -> ProjectorBundle:
        """ Target bundle. """
        return self._target

    @property
    def maps(self) -> np.ndarray:
        """ Read-only array of shape (nNodes, target ambient, source ambient). """
        return self._maps

    @property
    def label(self) -> str:
        """ Descriptive name. """
        return self._label



def inclusion(e: ProjectorBundle) -> BundleMorphism:
    """ The canonical injection ι_E of E into its trivial ambient bundle. A(x) = P(x).
    """
    ambient = trivialBundle(e.base, e.ambientDim)
    return BundleMorphism(e, ambient, e.proj, label="inclusion({})".format(e.label))


def projection(e: ProjectorBundle) -> BundleMorphism:
    """ The canonical projection π_E of the trivial ambient bundle onto E. A(x) = P(x).
    """
    ambient = trivialBundle(e.base, e.ambientDim)
    return BundleMorphism(ambient, e, e.proj, label="projection({})".format(e.label))


def identityMorphism(e: ProjectorBundle) -> BundleMorphism:
    """ The identity of E. """
    return BundleMorphism(e, e, e.proj, label="id({})".format(e.label))


def zeroMorphism(e: ProjectorBundle, f: ProjectorBundle) -> BundleMorphism:
    """ The zero morphism from E to F. """
    checkSameBase(e.base, f.base)
    maps = np.zeros((e.base.nNodes, f.ambientDim, e.ambientDim))
    return BundleMorphism(e, f, maps, label="zero({}, {})".format(e.label, f.label))


def morphismFromMatrices(source: ProjectorBundle, target: ProjectorBundle, raw: Any,
                         label: str = '') -> BundleMorphism:
    """ Creates a morphism from arbitrary matrices by sandwiching them: A = P_target·raw·P_source.
    """
    raw = asNumberArray(raw, name='raw')
    maps = np.matmul(np.matmul(target.proj, raw), source.proj)
    return BundleMorphism(source, target, maps, label=label)


def compose(mu2: BundleMorphism, mu1: BundleMorphism) -> BundleMorphism:
    """ The composition mu2 ∘ mu1. The matrices multiply node-wise.
    """
    checkSameBundle(mu1.target, mu2.source)
    return BundleMorphism(mu1.source, mu2.target, np.matmul(mu2.maps, mu1.maps),
                          label="{} o {}".format(mu2.label, mu1.label))


def scaleMorphism(mu: BundleMorphism, c: Union[complex, GridFunction]) -> BundleMorphism:
    """ Multiplies the morphism by a scalar or by a function on the base.
    """
    if isinstance(c, GridFunction):
        checkSameBase(mu.source.base, c.base)
        factor = c.values[:, np.newaxis, np.newaxis]
    else:
        factor = c
    return BundleMorphism(mu.source, mu.target, mu.maps * factor)


def sumMorphism(mu: BundleMorphism, nu: BundleMorphism) -> BundleMorphism:
    """ The morphism mu ⊕ nu between the Whitney sums. Block diagonal matrices.
    """
    return BundleMorphism(whitneySum(mu.source, nu.source), whitneySum(mu.target, nu.target),
                          _blockDiagonal(mu.maps, nu.maps),
                          label="{} + {}".format(mu.label, nu.label))


def tensorMorphism(mu: BundleMorphism, nu: BundleMorphism) -> BundleMorphism:
    """ The morphism mu ⊗ nu between the tensor products. Node-wise Kronecker products.
    """
    checkSameBase(mu.source.base, nu.source.base)
    return BundleMorphism(tensor(mu.source, nu.source), tensor(mu.target, nu.target),
                          _kron(mu.maps, nu.maps),
                          label="{} (x) {}".format(mu.label, nu.label))


def summandInclusion(e: ProjectorBundle, f: ProjectorBundle, index: int) -> BundleMorphism:
    """ The injection of summand `index` (0 for E, 1 for F) into E ⊕ F.
    """
    total = whitneySum(e, f)
    nNodes = e.base.nNodes
    if index == 0:
        maps = np.zeros((nNodes, total.ambientDim, e.ambientDim))
        maps[:, :e.ambientDim, :] = e.proj
        summand = e
    elif index == 1:
        maps = np.zeros((nNodes, total.ambientDim, f.ambientDim))
        maps[:, e.ambientDim:, :] = f.proj
        summand = f
    else:
        raise InvalidInputError("Summand index must be 0 or 1, got: {}".format(index))
    return BundleMorphism(summand, total, maps, label="inclusion{}({})".format(index, total.label))


def summandProjection(e: ProjectorBundle, f: ProjectorBundle, index: int) -> BundleMorphism:
    """ The projection of E ⊕ F onto summand `index` (0 for E, 1 for F).
    """
    incl = summandInclusion(e, f, index)
    return BundleMorphism(incl.target, incl.source, np.swapaxes(incl.maps, 1, 2),
                          label="projection{}({})".format(index, incl.target.label))


##############
# Generators #
##############


def frameGenerators(e: ProjectorBundle) -> List[Any]:
    """ The generators e_i(x) = P(x)ê_i of the module of sections, one per ambient dimension.

        Every section s satisfies s = Σ_i s_i·e_i where s_i is the ambient component i of s.
    """
    from vbdist.sections import Section  # Sections depend on bundles, not the other way around.
    return [Section(e, e.proj[:, :, i]) for i in range(e.ambientDim)]


def dualGenerators(e: ProjectorBundle) -> List[Any]:
    """ The generators ε_i(x) = Pᵀ(x)ê_i of the sections of the dual bundle.
    """
    return frameGenerators(dual(e))
