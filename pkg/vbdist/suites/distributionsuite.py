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

""" Invariants of scalar distributions: pairing and module multiplication.
"""
import logging

from vbdist.distributions import modMul, pair, pairingDeviation
from vbdist.suites.context import CheckContext
from vbdist.testdata import randomDistribution, randomFunction, randomTestDensity

logger = logging.getLogger(__name__)


def pairingBilinearity(ctx: CheckContext) -> float:
    """ ⟨αu + βv, w⟩ = α⟨u, w⟩ + β⟨v, w⟩ and ⟨u, αw + βw′⟩ = α⟨u, w⟩ + β⟨u, w′⟩.

        Point masses are at most of order 1. The deviation is relative to the size of the
        pairings once these exceed 1.
    """
    rng = ctx.generator('pairingBilinearity')
    deviation = 0.0
    for m in (ctx.circle(), ctx.interval()):
        for _ in range(ctx.batterySize):
            u = randomDistribution(m, rng, maxOrder=1, isComplex=ctx.isComplex)
            v = randomDistribution(m, rng, maxOrder=1, isComplex=ctx.isComplex)
            w1 = randomTestDensity(m, rng, isComplex=ctx.isComplex)
            w2 = randomTestDensity(m, rng, isComplex=ctx.isComplex)
            alpha, beta = rng.standard_normal(2)
            uw1, vw1, uw2 = pair(u, w1), pair(v, w1), pair(u, w2)
            scale = max(1.0, abs(alpha * uw1), abs(beta * vw1), abs(beta * uw2))
            inFirst = pair(u * alpha + v * beta, w1) - (alpha * uw1 + beta * vw1)
            inSecond = pair(u, w1 * alpha + w2 * beta) - (alpha * uw1 + beta * uw2)
            deviation = max(deviation, float(abs(inFirst)) / scale, float(abs(inSecond)) / scale)
    return deviation


def leibnizAdjoint(ctx: CheckContext) -> float:
    """ ⟨g·u, w⟩ = ⟨u, g·w⟩ for distributions with point masses of order up to 2.
    """
    rng = ctx.generator('leibnizAdjoint')
    deviation = 0.0
    for m in (ctx.circle(), ctx.interval()):
        for _ in range(ctx.batterySize):
            u = randomDistribution(m, rng, nPointMasses=3, maxOrder=2, isComplex=ctx.isComplex)
            g = randomFunction(m, rng, isComplex=ctx.isComplex)
            w = randomTestDensity(m, rng, isComplex=ctx.isComplex)
            deviation = max(deviation, float(abs(pair(modMul(g, u), w) - pair(u, w * g))))
    return deviation


def moduleAssociativity(ctx: CheckContext) -> float:
    """ (f·g)·u and f·(g·u) pair equally with the test battery.
    """
    rng = ctx.generator('moduleAssociativity')
    m = ctx.circle()
    deviation = 0.0
    for _ in range(ctx.batterySize):
        u = randomDistribution(m, rng, maxOrder=2, isComplex=ctx.isComplex)
        f = randomFunction(m, rng, isComplex=ctx.isComplex)
        g = randomFunction(m, rng, isComplex=ctx.isComplex)
        deviation = max(deviation, pairingDeviation(modMul(f * g, u), modMul(f, modMul(g, u)),
                                                    batterySize=ctx.batterySize, seed=ctx.seed))
    return deviation
