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

""" Invariants of the smoothing operators.
"""
import logging

from typing import Tuple

import numpy as np

from vbdist.bundles import ProjectorBundle, mobius, trivialBundle
from vbdist.distributions import delta, embedFunction
from vbdist.geometry import DiscreteManifold, GridFunction, product, smoothnessRatio
from vbdist.sections import Section
from vbdist.sections import modMul as modMulSection
from vbdist.smoothing import (MIN_EPS_IN_SPACINGS, ScalarSmoothingKernel, SmoothingOperator,
                              VectorKernel, applyScalar, applyVector, balancedMoveDeviation,
                              convergenceStudy, directKernelApply, errorRatios, homToOperator,
                              mollifier, mollifierOperator, operatorToHom, scaleTarget)
from vbdist.suites.context import CheckContext
from vbdist.testdata import (randomDistribution, randomSection, randomSmoothValues,
                             randomTensorTerms)
from vbdist.vdist import TensorRep, embedSection

logger = logging.getLogger(__name__)

# Number of seeded (kernel, kernel, input) triples.
N_OPERATOR_INPUTS = 10

# Resolution and widths of the convergence study.
CONVERGENCE_NODES = 256
CONVERGENCE_EPS = (0.4, 0.2, 0.1)


def randomScalarKernel(m: DiscreteManifold, n: DiscreteManifold,
                       rng: np.random.Generator) -> ScalarSmoothingKernel:
    """ A random smooth (not normalized) scalar kernel on M × N. """
    values = randomSmoothValues(product(m, n), rng)
    return ScalarSmoothingKernel(m, n, values.reshape(m.nNodes, n.nNodes))


def randomVectorKernel(e: ProjectorBundle, f: ProjectorBundle,
                       rng: np.random.Generator) -> VectorKernel:
    """ A random smooth section of E* ⊠ F. """
    m, n = e.base, f.base
    raw = randomSmoothValues(product(m, n), rng, trailing=(f.ambientDim, e.ambientDim))
    return VectorKernel.project(e, f, raw.reshape(m.nNodes, n.nNodes, f.ambientDim, e.ambientDim))


def _oracleBundles(ctx: CheckContext) -> Tuple[ProjectorBundle, ProjectorBundle]:
    """ The Möbius bundle as source and the trivial rank 2 bundle as target. """
    m = ctx.circle()
    return mobius(m), trivialBundle(m, 2)


def _randomInput(bundle: ProjectorBundle, rng: np.random.Generator, ctx: CheckContext) -> TensorRep:
    return TensorRep(bundle, randomTensorTerms(bundle, rng, maxOrder=1, isComplex=ctx.isComplex))


def _maxAbs(values: np.ndarray) -> float:
    return float(np.max(np.abs(values))) if values.size else 0.0


def _smallestEps(m: DiscreteManifold, eps: float) -> float:
    """ eps, or the smallest width the grid resolves if that is larger. """
    return max(eps, MIN_EPS_IN_SPACINGS * max(m.spacing))


def scalarLinearity(ctx: CheckContext) -> float:
    """ applyScalar is linear in the distribution.
    """
    rng = ctx.generator('scalarLinearity')
    m = ctx.circle()
    deviation = 0.0
    for _ in range(N_OPERATOR_INPUTS):
        kappa = randomScalarKernel(m, m, rng)
        u = randomDistribution(m, rng, maxOrder=1, isComplex=ctx.isComplex)
        v = randomDistribution(m, rng, maxOrder=1, isComplex=ctx.isComplex)
        alpha, beta = rng.standard_normal(2)
        lhs = applyScalar(kappa, u * alpha + v * beta).values
        rhs = alpha * applyScalar(kappa, u).values + beta * applyScalar(kappa, v).values
        deviation = max(deviation, _maxAbs(lhs - rhs))
    return deviation


def oracleEquivalence(ctx: CheckContext) -> float:
    """ applyVector agrees with the independent directKernelApply.
    """
    rng = ctx.generator('oracleEquivalence')
    e, f = _oracleBundles(ctx)
    deviation = 0.0
    for _ in range(N_OPERATOR_INPUTS):
        kernel = randomVectorKernel(e, f, rng)
        kappa = randomScalarKernel(e.base, f.base, rng)
        u = _randomInput(e, rng, ctx)
        viaSplitting = applyVector(SmoothingOperator(e, f, [(kernel, kappa)]), u)
        viaPairing = directKernelApply(kernel, kappa, u)
        deviation = max(deviation, _maxAbs(viaSplitting.values - viaPairing.values))
    return deviation


def balancedMove(ctx: CheckContext) -> float:
    """ A function on M × N may be moved between the vector and the scalar kernel.
    """
    rng = ctx.generator('balancedMove')
    e, f = _oracleBundles(ctx)
    mn = product(e.base, f.base)
    deviation = 0.0
    for _ in range(N_OPERATOR_INPUTS):
        op = SmoothingOperator(e, f, [(randomVectorKernel(e, f, rng),
                                       randomScalarKernel(e.base, f.base, rng))])
        factor = GridFunction(mn, randomSmoothValues(mn, rng))
        u = _randomInput(e, rng, ctx)
        deviation = max(deviation, balancedMoveDeviation(op, factor, u))
    return deviation


def targetModule(ctx: CheckContext) -> float:
    """ b·(op u) equals the operator with K scaled by b(y) applied to u.
    """
    rng = ctx.generator('targetModule')
    e, f = _oracleBundles(ctx)
    deviation = 0.0
    for _ in range(N_OPERATOR_INPUTS):
        op = SmoothingOperator(e, f, [(randomVectorKernel(e, f, rng),
                                       randomScalarKernel(e.base, f.base, rng))])
        b = GridFunction(f.base, randomSmoothValues(f.base, rng))
        u = _randomInput(e, rng, ctx)
        lhs = modMulSection(b, applyVector(op, u))
        rhs = applyVector(scaleTarget(op, b), u)
        deviation = max(deviation, _maxAbs(lhs.values - rhs.values))
    return deviation


def outputSmoothness(ctx: CheckContext) -> float:
    """ Regularized sections satisfy the smoothness bound relative to their size.

        Returns by how much the relative adjacent node ratio exceeds the smoothness constant
        (zero if it never does).
    """
    rng = ctx.generator('outputSmoothness')
    e, _ = _oracleBundles(ctx)
    op = mollifierOperator(e, _smallestEps(e.base, 0.5))
    excess = 0.0
    for _ in range(N_OPERATOR_INPUTS):
        result = applyVector(op, _randomInput(e, rng, ctx))
        scale = _maxAbs(result.values)
        if scale == 0.0:
            continue
        ratio = smoothnessRatio(result.base, result.values) / scale
        excess = max(excess, ratio - ctx.config.smoothnessConstant)
    return excess


def deltaSlice(ctx: CheckContext) -> float:
    """ Smoothing δ_p reproduces the kernel slice κ(p, ·), also for vector kernels.
    """
    rng = ctx.generator('deltaSlice')
    e, f = _oracleBundles(ctx)
    m = e.base
    kappa = mollifier(m, _smallestEps(m, 0.4))
    kernel = randomVectorKernel(e, f, rng)
    op = SmoothingOperator(e, f, [(kernel, kappa)])
    deviation = 0.0
    for node in rng.choice(m.nNodes, size=min(N_OPERATOR_INPUTS, m.nNodes), replace=False):
        node = int(node)
        deviation = max(deviation, _maxAbs(applyScalar(kappa, delta(m, node)).values -
                                           kappa.values[node]))

        s = randomSection(e, rng, isComplex=ctx.isComplex)
        result = applyVector(op, TensorRep(e, [(s, delta(m, node))]))
        expected = kappa.values[node][:, np.newaxis] * np.einsum('yca,a->yc', kernel.values[node],
                                                                 s.values[node])
        deviation = max(deviation, _maxAbs(result.values - expected))
    return deviation


def mollifierNormalization(ctx: CheckContext) -> float:
    """ The mollifier maps the constant 1 to 1, and regularizing a constant section of a
        trivial bundle gives the section back.
    """
    m = ctx.circle()
    eps = _smallestEps(m, 0.4)
    one = GridFunction.constant(m)
    deviation = _maxAbs(applyScalar(mollifier(m, eps), embedFunction(one)).values - 1.0)

    for rank in (1, 2):
        triv = trivialBundle(m, rank)
        constant = Section(triv, np.ones((m.nNodes, rank)))
        rows = convergenceStudy([eps, 2 * eps], embedSection(constant), reference=constant)
        deviation = max(deviation, max(row.supError for row in rows))
    return deviation


def convergenceRatios(ctx: CheckContext) -> float:
    """ Halving ε divides the regularization error of a smooth section by about 4.

        Returns the largest distance of the successive error ratios from 4.
    """
    m = ctx.circle(CONVERGENCE_NODES)
    triv = trivialBundle(m, 1)
    reference = Section(triv, np.sin(m.coordinate(0))[:, np.newaxis])
    rows = convergenceStudy(CONVERGENCE_EPS, embedSection(reference), reference=reference)
    ratios = errorRatios(rows)
    logger.debug("convergenceRatios: errors {}, ratios {}"
                 .format([row.supError for row in rows], ratios))
    return float(np.max(np.abs(np.asarray(ratios) - 4.0)))


def operatorHomRoundTrip(ctx: CheckContext) -> float:
    """ Rebuilding an operator from its values on the generators of E ⊠ F* gives an operator
        with the same action.
    """
    rng = ctx.generator('operatorHomRoundTrip')
    e, f = _oracleBundles(ctx)
    deviation = 0.0
    for _ in range(2):
        op = SmoothingOperator(e, f, [(randomVectorKernel(e, f, rng),
                                       randomScalarKernel(e.base, f.base, rng))
                                      for _ in range(2)])
        rebuilt = homToOperator(operatorToHom(op))
        u = _randomInput(e, rng, ctx)
        deviation = max(deviation, _maxAbs(applyVector(op, u).values -
                                           applyVector(rebuilt, u).values))
    return deviation
