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

""" Invariants of the bundle constructions and morphisms.
"""
import logging

import numpy as np

from vbdist.bundles import (complement, compose, dual, externalTensor, inclusion, mobius,
                            morphismFromMatrices, projection, tensor, trivialBundle, whitneySum)
from vbdist.sections import pushforward
from vbdist.suites.context import CheckContext
from vbdist.testdata import randomSection, randomSmoothValues

logger = logging.getLogger(__name__)


def _maxDiff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def functoriality(ctx: CheckContext) -> float:
    """ Pushing forward along μ₂ ∘ μ₁ equals pushing forward along μ₁ and then along μ₂.
    """
    rng = ctx.generator('functoriality')
    m = ctx.circle()
    mob = mobius(m)
    triv = trivialBundle(m, 2)
    deviation = 0.0
    for _ in range(ctx.batterySize):
        raw = randomSmoothValues(m, rng, trailing=(2, 2))
        mu1 = morphismFromMatrices(mob, triv, raw)
        mu2 = projection(mob)
        s = randomSection(mob, rng, isComplex=ctx.isComplex)
        lhs = pushforward(compose(mu2, mu1), s)
        rhs = pushforward(mu2, pushforward(mu1, s))
        deviation = max(deviation, _maxDiff(lhs.values, rhs.values))

    # π ∘ ι is the identity of E.
    s = randomSection(mob, rng, isComplex=ctx.isComplex)
    roundTrip = pushforward(compose(projection(mob), inclusion(mob)), s)
    return max(deviation, _maxDiff(roundTrip.values, s.values))


def additivity(ctx: CheckContext) -> float:
    """ dual, tensor and externalTensor applied to a Whitney sum give the Whitney sum of the
        results.

        With ambient index a·n_G + c for E ⊗ G no index permutation is needed.
    """
    m = ctx.circle()
    mob = mobius(m)
    e, f, g = mob, complement(mob), trivialBundle(m, 1)
    ef = whitneySum(e, f)

    deviations = [
        _maxDiff(dual(ef).proj, whitneySum(dual(e), dual(f)).proj),
        _maxDiff(tensor(ef, g).proj, whitneySum(tensor(e, g), tensor(f, g)).proj),
        _maxDiff(tensor(ef, mob).proj, whitneySum(tensor(e, mob), tensor(f, mob)).proj),
    ]

    n = ctx.circle(max(8, ctx.resolution // 4))
    small, trivSmall = mobius(n), trivialBundle(n, 1)
    externalSum = externalTensor(ef, trivSmall)
    sumOfExternals = whitneySum(externalTensor(e, trivSmall), externalTensor(f, trivSmall))
    deviations.append(_maxDiff(externalSum.proj, sumOfExternals.proj))

    externalSum = externalTensor(ef, small)
    sumOfExternals = whitneySum(externalTensor(e, small), externalTensor(f, small))
    deviations.append(_maxDiff(externalSum.proj, sumOfExternals.proj))
    return max(deviations)


def complementSum(ctx: CheckContext) -> float:
    """ P_E + P_F is the identity for F = complement(E), at every node.
    """
    deviation = 0.0
    for e in ctx.testBundles():
        identity = np.eye(e.ambientDim)
        deviation = max(deviation, _maxDiff(e.proj + complement(e).proj,
                                            np.broadcast_to(identity, e.proj.shape)))
    return deviation
