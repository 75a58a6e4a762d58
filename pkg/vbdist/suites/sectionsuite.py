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

""" Invariants of the module of sections.
"""
import logging

import numpy as np

from vbdist.bundles import (dual, identityMorphism, mobius, morphismFromMatrices, tensorMorphism,
                            trivialBundle)
from vbdist.geometry import GridFunction
from vbdist.sections import (Section, combineGenerators, contract, fiberwiseTensor,
                             generatorCoefficients, modMul, pullbackDual, pushforward)
from vbdist.suites.context import CheckContext
from vbdist.testdata import randomFunction, randomSection, randomSmoothValues

logger = logging.getLogger(__name__)


def _maxDiff(s: Section, t: Section) -> float:
    return float(np.max(np.abs(s.values - t.values)))


def moduleAxioms(ctx: CheckContext) -> float:
    """ Unit, associativity and both distributive laws of the C∞(M)-module, node-wise.
    """
    rng = ctx.generator('moduleAxioms')
    deviation = 0.0
    for e in ctx.testBundles():
        m = e.base
        one = GridFunction.constant(m)
        for _ in range(4):
            f = randomFunction(m, rng, isComplex=ctx.isComplex)
            g = randomFunction(m, rng, isComplex=ctx.isComplex)
            s = randomSection(e, rng, isComplex=ctx.isComplex)
            t = randomSection(e, rng, isComplex=ctx.isComplex)
            deviation = max(deviation,
                            _maxDiff(modMul(one, s), s),
                            _maxDiff(modMul(f * g, s), modMul(f, modMul(g, s))),
                            _maxDiff(modMul(f, s + t), modMul(f, s) + modMul(f, t)),
                            _maxDiff(modMul(f + g, s), modMul(f, s) + modMul(g, s)))
    return deviation


def pushforwardLinearity(ctx: CheckContext) -> float:
    """ μ_*(f·s) = f·μ_*(s) and pullbackDual is the adjoint of pushforward.
    """
    rng = ctx.generator('pushforwardLinearity')
    m = ctx.circle()
    mob = mobius(m)
    triv = trivialBundle(m, 2)
    deviation = 0.0
    for _ in range(ctx.batterySize):
        mu = morphismFromMatrices(mob, triv, randomSmoothValues(m, rng, trailing=(2, 2)))
        f = randomFunction(m, rng, isComplex=ctx.isComplex)
        s = randomSection(mob, rng, isComplex=ctx.isComplex)
        t = randomSection(dual(triv), rng, isComplex=ctx.isComplex)
        deviation = max(deviation, _maxDiff(pushforward(mu, modMul(f, s)),
                                            modMul(f, pushforward(mu, s))))
        adjoint = contract(s, pullbackDual(mu, t)).values - contract(pushforward(mu, s), t).values
        deviation = max(deviation, float(np.max(np.abs(adjoint))))
    return deviation


def generatorExpansion(ctx: CheckContext) -> float:
    """ Every section is the combination Σ_i s_i·e_i of the frame generators.
    """
    rng = ctx.generator('generatorExpansion')
    deviation = 0.0
    for e in ctx.testBundles():
        for _ in range(ctx.batterySize):
            s = randomSection(e, rng, isComplex=ctx.isComplex)
            deviation = max(deviation, _maxDiff(combineGenerators(e, generatorCoefficients(s)), s))
    return deviation


def fiberwiseTensorNaturality(ctx: CheckContext) -> float:
    """ ψ(μ_* s ⊗ t) = (μ ⊗ id)_* ψ(s ⊗ t).
    """
    rng = ctx.generator('fiberwiseTensorNaturality')
    m = ctx.circle()
    mob = mobius(m)
    triv = trivialBundle(m, 2)
    deviation = 0.0
    for _ in range(ctx.batterySize):
        mu = morphismFromMatrices(mob, triv, randomSmoothValues(m, rng, trailing=(2, 2)))
        s = randomSection(mob, rng, isComplex=ctx.isComplex)
        t = randomSection(mob, rng, isComplex=ctx.isComplex)
        lhs = fiberwiseTensor(pushforward(mu, s), t)
        rhs = pushforward(tensorMorphism(mu, identityMorphism(mob)), fiberwiseTensor(s, t))
        deviation = max(deviation, _maxDiff(lhs, rhs))
    return deviation
