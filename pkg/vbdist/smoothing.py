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

""" Smoothing operators D′(M, E) → Γ(N, F).

    A scalar smoothing operator D′(M) → C∞(N) is given by a kernel κ(x, y) and acts by pairing:
    (κ u)(y) = ⟨u, κ(·, y)⟩. A vector valued smoothing operator is a finite sum of pairs
    (K_j, κ_j) where K_j is a section of E* ⊠ F, stored as one matrix K_j(x, y) per node of M × N.

    applyVector evaluates such an operator by contracting the kernel sections with the sections of
    the input, multiplying the result into the scalar distributions and smoothing with κ_j.
    directKernelApply computes the same thing along an independent path, by pairing the input
    with the test sections x ↦ κ(x, y)·(row c of K(x, y)).
"""
from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from vbdist.bundles import (ProjectorBundle, checkIsDualPair, checkSameBundle, dual,
                            dualGenerators, externalTensor, frameGenerators)
from vbdist.distributions import Regular, ScalarDistribution, leibnizTerms
from vbdist.geometry import (DiscreteManifold, GridFunction, TestDensity, checkSameBase, product,
                             smoothnessRatio, stencil)
from vbdist.sections import Section, contract
from vbdist.utils.cls import (asNumberArray, checkArrayShape, checkIsASequence, checkType,
                              readOnly)
from vbdist.utils.defs import (MAX_PAIRS, NORMALIZATION_TOL, PROJECTOR_TOL, BoundaryLayerError,
                               BundleMismatchError, ConsistencyError, FiberError,
                               InvalidInputError)
from vbdist.vdist import AnyRep, pairVdist, toTensor

logger = logging.getLogger(__name__)

# Number of target nodes processed at once in applyVector.
BLOCK_SIZE = 64

# Smallest mollifier width in units of the grid spacing.
MIN_EPS_IN_SPACINGS = 3.0


###########
# Kernels #
###########


class ScalarSmoothingKernel():
    """ A kernel κ(x, y) on M × N, stored as an array of shape (nNodes(M), nNodes(N)).

        If normalized, Σ_x weight(x)·κ(x, y) = 1 for every y.
    """
    def __init__(self, source: DiscreteManifold, target: DiscreteManifold, values: Any,
                 normalized: bool = False):
        checkType(source, DiscreteManifold)
        checkType(target, DiscreteManifold)
        values = asNumberArray(values, name='kernel values')
        checkArrayShape(values, (source.nNodes, target.nNodes), name='kernel values')
        self._source = source
        self._target = target
        self._values = readOnly(values.copy())
        self._normalized = bool(normalized)

        if self._normalized:
            deviation = float(np.max(np.abs(source.weights @ self._values - 1.0)))
            if deviation > NORMALIZATION_TOL:
                raise ConsistencyError("Kernel flagged normalized deviates {:.3g} from 1"
                                       .format(deviation))

    def __repr__(self) -> str:
        return "<ScalarSmoothingKernel: {} -> {}>".format(self._source.label, self._target.label)

    @property
    def source(self) -> DiscreteManifold:
        """ The manifold M the distributions live on. """
        return self._source

    @property
    def target(self) -> DiscreteManifold:
        """ The manifold N the results live on. """
        return self._target

    @property
    def values(self) -> np.ndarray:
        """ Read-only array of shape (nNodes(M), nNodes(N)). """
        return self._values

    @property
    def normalized(self) -> bool:
        """ True if the kernel integrates to one in its first slot. """
        return self._normalized


    def smoothnessRatio(self) -> float:
        """ Adjacent node ratio |Δκ|/h on M × N relative to max |κ|.
        """
        scale = float(np.max(np.abs(self._values))) if self._values.size else 0.0
        if scale == 0.0:
            return 0.0
        grid = product(self._source, self._target)
        return smoothnessRatio(grid, self._values.ravel()) / scale


    def isSmooth(self, constant: float) -> bool:
        """ True if the relative adjacent node ratio is at most constant.
        """
        return self.smoothnessRatio() <= constant


    def scaled(self, factor: np.ndarray) -> ScalarSmoothingKernel:
        """ The kernel multiplied by factor(x, y), given as an array of the kernel's shape.
        """
        return ScalarSmoothingKernel(self._source, self._target, self._values * factor)



def kernelBundle(e: ProjectorBundle, f: ProjectorBundle) -> ProjectorBundle:
    """ The bundle E* ⊠ F over M × N of which vector kernels are sections. """
    return externalTensor(dual(e), f)


class VectorKernel():
    """ A section K of E* ⊠ F, stored as a matrix K(x, y) of shape (ambient F) × (ambient E).

        Satisfies P_F(y)·K(x, y)·P_E(x) = K(x, y).
    """
    def __init__(self, source: ProjectorBundle, target: ProjectorBundle, values: Any):
        checkType(source, ProjectorBundle)
        checkType(target, ProjectorBundle)
        values = asNumberArray(values, name='kernel values')
        checkArrayShape(values, (source.base.nNodes, target.base.nNodes, target.ambientDim,
                                 source.ambientDim), name='vector kernel values')

        sandwich = np.einsum('yab,xybc,xcd->xyad', target.proj, values, source.proj)
        if values.size:
            fiberError = float(np.max(np.abs(sandwich - values)))
            if fiberError > PROJECTOR_TOL * max(1.0, float(np.max(np.abs(values)))):
                raise FiberError("Vector kernel leaves the fibers, max error {:.3g}"
                                 .format(fiberError))
        self._source = source
        self._target = target
        self._values = readOnly(values.copy())


    @classmethod
    def project(cls, source: ProjectorBundle, target: ProjectorBundle, raw: Any) -> VectorKernel:
        """ Creates a kernel from arbitrary matrices: P_F(y)·raw(x, y)·P_E(x).
        """
        raw = asNumberArray(raw, name='raw')
        return cls(source, target, np.einsum('yab,xybc,xcd->xyad', target.proj, raw, source.proj))


    @classmethod
    def fromSection(cls, source: ProjectorBundle, target: ProjectorBundle,
                    section: Section) -> VectorKernel:
        """ The kernel of a section of E* ⊠ F.
        """
        checkSameBundle(kernelBundle(source, target), section.bundle)
        nM, nN = source.base.nNodes, target.base.nNodes
        values = section.values.reshape(nM, nN, source.ambientDim, target.ambientDim)
        return cls(source, target, np.swapaxes(values, 2, 3))


    def __repr__(self) -> str:
        return "<VectorKernel: {} -> {}>".format(self._source.label, self._target.label)

    @property
    def source(self) -> ProjectorBundle:
        """ The bundle E over M. """
        return self._source

    @property
    def target(self) -> ProjectorBundle:
        """ The bundle F over N. """
        return self._target

    @property
    def values(self) -> np.ndarray:
        """ Read-only array of shape (nNodes(M), nNodes(N), ambient F, ambient E). """
        return self._values


    def toSection(self) -> Section:
        """ The kernel as a section of E* ⊠ F. Ambient index a·n_F + b holds K[b, a].
        """
        bundle = kernelBundle(self._source, self._target)
        values = np.swapaxes(self._values, 2, 3).reshape(bundle.base.nNodes, bundle.ambientDim)
        return Section(bundle, values)


    def scaled(self, factor: np.ndarray) -> VectorKernel:
        """ The kernel multiplied by factor(x, y), given as an array of shape (nNodes(M), nNodes(N)).
        """
        return VectorKernel(self._source, self._target,
                            self._values * factor[:, :, np.newaxis, np.newaxis])



class SmoothingOperator():
    """ Σ_j K_j ⊗ κ_j: vector kernels paired with scalar smoothing kernels.
    """
    def __init__(self, source: ProjectorBundle, target: ProjectorBundle,
                 pairs: Sequence[Tuple[VectorKernel, ScalarSmoothingKernel]] = ()):
        checkType(source, ProjectorBundle)
        checkType(target, ProjectorBundle)
        checkIsASequence(pairs)
        pairs = tuple(pairs)
        if len(pairs) > MAX_PAIRS:
            raise ConsistencyError("Smoothing operator has {} pairs, the maximum is {}"
                                   .format(len(pairs), MAX_PAIRS))
        for kernel, kappa in pairs:
            checkType(kernel, VectorKernel)
            checkType(kappa, ScalarSmoothingKernel)
            checkSameBundle(source, kernel.source)
            checkSameBundle(target, kernel.target)
            checkSameBase(source.base, kappa.source)
            checkSameBase(target.base, kappa.target)
        self._source = source
        self._target = target
        self._pairs = pairs

    def __repr__(self) -> str:
        return "<SmoothingOperator: {} -> {}, {} pairs>".format(
            self._source.label, self._target.label, len(self._pairs))

    @property
    def source(self) -> ProjectorBundle:
        """ The bundle E over M. """
        return self._source

    @property
    def target(self) -> ProjectorBundle:
        """ The bundle F over N. """
        return self._target

    @property
    def pairs(self) -> Tuple[Tuple[VectorKernel, ScalarSmoothingKernel], ...]:
        """ The (vector kernel, scalar kernel) pairs. """
        return self._pairs


###################
# Scalar smoothing #
###################


def applyScalar(k: ScalarSmoothingKernel, u: ScalarDistribution) -> GridFunction:
    """ The smooth function y ↦ ⟨u, κ(·, y)⟩ on N.

        Regular(f) gives Σ_x w_x·f(x)·κ(x, y). PointMass(p, j, c) gives c·(−1)^j times the j-th
        x-derivative of κ at (p, y).
    """
    checkType(k, ScalarSmoothingKernel)
    checkType(u, ScalarDistribution)
    checkSameBase(k.source, u.base)
    m = k.source
    terms: List[np.ndarray] = [np.zeros(k.target.nNodes)]
    for atom in u.atoms:
        if isinstance(atom, Regular):
            terms.append((m.weights * atom.function.values) @ k.values)
        else:
            indices, coeffs = stencil(m, atom.node, atom.order)
            terms.append(atom.weight * (-1) ** atom.order * (coeffs @ k.values[indices]))
    return GridFunction(k.target, sum(terms[1:], terms[0]))


def mollifier(m: DiscreteManifold, eps: float) -> ScalarSmoothingKernel:
    """ Gaussian mollifier κ_ε(x, y) = c(y)·exp(−d(x, y)² / (2ε²)) with M = N = m.

        The distance wraps around on periodic axes (a wrapped Gaussian). The factor c(y) makes
        Σ_x weight(x)·κ_ε(x, y) = 1 on the grid.

        Raises InvalidInputError if eps is less than three grid spacings.
    """
    minEps = MIN_EPS_IN_SPACINGS * max(m.spacing)
    if not eps >= minEps:
        raise InvalidInputError("Mollifier width {} too small for {}, the minimum is {:.6g}"
                                .format(eps, m.label, minEps))

    sqDist = np.zeros((m.nNodes, m.nNodes))
    for nr, axis in enumerate(m.axes):
        coords = m.coordinate(nr)
        diff = np.abs(coords[:, np.newaxis] - coords[np.newaxis, :])
        if axis.periodic:
            diff = np.minimum(diff, 2 * np.pi - diff)
        sqDist += diff ** 2

    gauss = np.exp(-sqDist / (2.0 * eps ** 2))
    return ScalarSmoothingKernel(m, m, gauss / (m.weights @ gauss), normalized=True)


###################
# Vector smoothing #
###################


def applyVector(op: SmoothingOperator, u: AnyRep) -> Section:
    """ Applies Σ_j K_j ⊗ κ_j to a distributional section of E, giving a section of F over N.

        For u = Σ_i s_i ⊗ v_i the component c at y is
        Σ_{i,j} apply_scalar(κ_j, mod_mul(g_ijyc, v_i))(y) with g_ijyc(x) = (K_j(x, y)·s_i(x))_c.
        The contractions g are computed for a block of target nodes at once, and the Leibniz
        expansion of the point masses is done for all functions g of the block together.
    """
    checkType(op, SmoothingOperator)
    tensorRep = toTensor(u)
    checkSameBundle(op.source, tensorRep.bundle)
    m = op.source.base
    nTarget = op.target.base.nNodes

    blocks: List[np.ndarray] = []
    for start in range(0, nTarget, BLOCK_SIZE):
        ys = slice(start, min(start + BLOCK_SIZE, nTarget))
        blockResult: Any = np.zeros((ys.stop - ys.start, op.target.ambientDim))
        for kernel, kappa in op.pairs:
            kappaBlock = kappa.values[:, ys]
            for section, dist in tensorRep.terms:
                g = np.einsum('xyca,xa->xyc', kernel.values[:, ys], section.values)
                for atom in dist.atoms:
                    if isinstance(atom, Regular):
                        wf = m.weights * atom.function.values
                        blockResult = blockResult + np.einsum('x,xyc,xy->yc', wf, g, kappaBlock)
                    else:
                        for node, order, weight in leibnizTerms(m, atom.node, atom.order,
                                                                atom.weight, g):
                            indices, coeffs = stencil(m, node, order)
                            kappaRow = (-1) ** order * (coeffs @ kappaBlock[indices])
                            blockResult = blockResult + weight * kappaRow[:, np.newaxis]
        blocks.append(blockResult)

    values = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, op.target.ambientDim))
    values = np.einsum('yab,yb->ya', op.target.proj, values)
    logger.debug("applyVector: {} pairs, {} terms, {} target nodes"
                 .format(len(op.pairs), len(tensorRep.terms), nTarget))
    return Section(op.target, values)


def directKernelApply(kernel: VectorKernel, kappa: ScalarSmoothingKernel, u: AnyRep) -> Section:
    """ Applies the single pair (K, κ) by pairing u with a test section per target node and
        component.

        Component c at y is ⟨u, t_yc ⊗ κ(·, y)⟩ with t_yc(x) = row c of K(x, y), a section of E*.

        Precondition: every column κ(·, y) must be a test density, so on a base M with
        non-periodic axes κ must be exactly 0 on the boundary layers of M, for all y. Kernels on
        the circle or torus always qualify. Multiply the columns by testdata.cutoff(M) to make
        an interval kernel qualify, or use applyVector instead.

        Raises BoundaryLayerError if κ does not vanish on the boundary layers of M.
    """
    checkType(kernel, VectorKernel)
    checkType(kappa, ScalarSmoothingKernel)
    tensorRep = toTensor(u)
    checkSameBundle(kernel.source, tensorRep.bundle)
    checkSameBase(kernel.source.base, kappa.source)
    checkSameBase(kernel.target.base, kappa.target)

    m = kernel.source.base
    if np.any(kappa.values[m.boundaryMask(), :] != 0):
        raise BoundaryLayerError("Direct application needs a kernel that vanishes on the "
                                 "boundary layers of {}".format(m.label))
    dualSource = dual(kernel.source)
    rows = []
    for y in range(kernel.target.base.nNodes):
        w = TestDensity(m, kappa.values[:, y])
        rows.append([pairVdist(tensorRep, Section(dualSource, kernel.values[:, y, c, :]), w)
                     for c in range(kernel.target.ambientDim)])
    values = np.array(rows).reshape(kernel.target.base.nNodes, kernel.target.ambientDim)
    return Section(kernel.target, values)


def directApply(op: SmoothingOperator, u: AnyRep) -> Section:
    """ Sum of directKernelApply over the pairs of the operator. """
    result = Section.zero(op.target)
    for kernel, kappa in op.pairs:
        result = result + directKernelApply(kernel, kappa, u)
    return result


################
# Module moves #
################


def combinedKernel(op: SmoothingOperator) -> np.ndarray:
    """ The full matrix kernel Σ_j κ_j(x, y)·K_j(x, y). """
    shape = (op.source.base.nNodes, op.target.base.nNodes, op.target.ambientDim,
             op.source.ambientDim)
    total: Any = np.zeros(shape)
    for kernel, kappa in op.pairs:
        total = total + kappa.values[:, :, np.newaxis, np.newaxis] * kernel.values
    return total


def balancedMoveDeviation(op: SmoothingOperator, f: GridFunction, u: AnyRep) -> float:
    """ Largest difference between applying (f·K_j, κ_j) and (K_j, f·κ_j) to u.

        f is a function on M × N.
    """
    checkSameBase(product(op.source.base, op.target.base), f.base)
    factor = f.values.reshape(op.source.base.nNodes, op.target.base.nNodes)
    onKernels = SmoothingOperator(op.source, op.target,
                                  [(kernel.scaled(factor), kappa) for kernel, kappa in op.pairs])
    onScalars = SmoothingOperator(op.source, op.target,
                                  [(kernel, kappa.scaled(factor)) for kernel, kappa in op.pairs])
    difference = applyVector(onKernels, u).values - applyVector(onScalars, u).values
    return float(np.max(np.abs(difference))) if difference.size else 0.0


def balancedMoveCheck(op: SmoothingOperator, f: GridFunction, u: AnyRep, tol: float) -> bool:
    """ True if moving f between the vector and the scalar kernels changes the result by at
        most tol.
    """
    return balancedMoveDeviation(op, f, u) <= tol


def scaleTarget(op: SmoothingOperator, b: GridFunction) -> SmoothingOperator:
    """ The C∞(N)-module action: every K_j multiplied by b(y).
    """
    checkSameBase(op.target.base, b.base)
    factor = np.broadcast_to(b.values[np.newaxis, :], (op.source.base.nNodes, b.base.nNodes))
    return SmoothingOperator(op.source, op.target,
                             [(kernel.scaled(factor), kappa) for kernel, kappa in op.pairs])


def projectionKernel(e: ProjectorBundle, f: ProjectorBundle) -> VectorKernel:
    """ The vector kernel K(x, y) = P_F(y)·P_E(x). Needs equal ambient dimensions.

        Regularizing with this kernel and a mollifier maps a section of E close to itself when
        E = F.
    """
    if e.ambientDim != f.ambientDim:
        raise BundleMismatchError("Ambient dimensions differ: {} != {}"
                                  .format(e.ambientDim, f.ambientDim))
    return VectorKernel(e, f, np.einsum('yab,xbc->xyac', f.proj, e.proj))


def mollifierOperator(e: ProjectorBundle, eps: float) -> SmoothingOperator:
    """ The single pair operator (projectionKernel(e, e), mollifier(eps)) from E to E.
    """
    return SmoothingOperator(e, e, [(projectionKernel(e, e), mollifier(e.base, eps))])


#############################
# Operators as module maps  #
#############################


class OperatorHom():
    """ A smoothing operator seen as a C∞(M × N)-linear map from sections of E ⊠ F* to scalar
        smoothing kernels: σ ↦ Σ_j contract(K_j, σ)·κ_j.
    """
    def __init__(self, op: SmoothingOperator):
        checkType(op, SmoothingOperator)
        self._op = op
        self._kernelSections = [kernel.toSection() for kernel, _ in op.pairs]

    @property
    def source(self) -> ProjectorBundle:
        """ The bundle E over M. """
        return self._op.source

    @property
    def target(self) -> ProjectorBundle:
        """ The bundle F over N. """
        return self._op.target

    def evaluate(self, sigma: Section) -> ScalarSmoothingKernel:
        """ Returns Σ_j contract(K_j, σ)·κ_j for a section σ of the dual of E* ⊠ F.
        """
        checkIsDualPair(kernelBundle(self.source, self.target), sigma.bundle)
        m, n = self.source.base, self.target.base
        values: Any = np.zeros((m.nNodes, n.nNodes))
        for kernelSection, (_, kappa) in zip(self._kernelSections, self._op.pairs):
            contraction = contract(kernelSection, sigma).values.reshape(m.nNodes, n.nNodes)
            values = values + contraction * kappa.values
        return ScalarSmoothingKernel(m, n, values)


def operatorToHom(op: SmoothingOperator) -> OperatorHom:
    """ The smoothing operator as a map on sections of E ⊠ F*. """
    return OperatorHom(op)


def homToOperator(hom: OperatorHom) -> SmoothingOperator:
    """ Rebuilds a smoothing operator from its values on the generators of E ⊠ F*.

        With generators g_k of E* ⊠ F and dual generators ε_k this is Σ_k g_k ⊗ hom(ε_k). For
        trivial line bundles it is hom ↦ hom(1).
    """
    bundle = kernelBundle(hom.source, hom.target)
    pairs = []
    for gen, dualGen in zip(frameGenerators(bundle), dualGenerators(bundle)):
        if not np.any(gen.values):
            continue
        pairs.append((VectorKernel.fromSection(hom.source, hom.target, gen),
                      hom.evaluate(dualGen)))
    return SmoothingOperator(hom.source, hom.target, pairs)


###############
# Convergence #
###############


@dataclass(frozen=True)
class ConvergenceRow:
    """ One row of a convergence study. supError is None if there is no reference. """
    eps: float
    supError: Optional[float]
    section: Section


def convergenceStudy(epsList: Sequence[float], u: AnyRep,
                     reference: Optional[Section] = None) -> List[ConvergenceRow]:
    """ Regularizes u with mollifierOperator(E, ε) for every ε and measures the sup error
        against the reference section.
    """
    tensorRep = toTensor(u)
    if reference is not None:
        checkSameBundle(tensorRep.bundle, reference.bundle)

    rows = []
    for eps in epsList:
        smoothed = applyVector(mollifierOperator(tensorRep.bundle, eps), tensorRep)
        supError = None
        if reference is not None:
            supError = float(np.max(np.abs(smoothed.values - reference.values)))
        logger.debug("convergenceStudy: eps = {}, sup error = {}".format(eps, supError))
        rows.append(ConvergenceRow(float(eps), supError, smoothed))
    return rows


def errorRatios(rows: Sequence[ConvergenceRow]) -> List[float]:
    """ Ratios of successive sup errors. A ratio whose denominator error is 0 is nan.
    """
    errors = [row.supError for row in rows]
    if any(err is None for err in errors):
        raise InvalidInputError("Error ratios need a reference section")
    ratios = []
    for prevRow, row in zip(rows[:-1], rows[1:]):
        if row.supError == 0:
            logger.warning("Zero regularization error at eps={}, ratio undefined".format(row.eps))
            ratios.append(float('nan'))
        else:
            ratios.append(prevRow.supError / row.supError)  # type: ignore
    return ratios
