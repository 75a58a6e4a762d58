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

""" Invariants of the isomorphism between distributional sections and module maps.
"""
import logging

from typing import List, Tuple

import numpy as np

from vbdist.bundles import (BundleMorphism, ProjectorBundle, complement, dual, dualGenerators,
                            identityMorphism, inclusion, mobius, morphismFromMatrices, projection,
                            scaleMorphism, trivialBundle, whitneySum, zeroMorphism)
from vbdist.distributions import modMul, pairingDeviation, sumDistributions
from vbdist.geometry import GridFunction
from vbdist.sections import modMul as modMulSection
from vbdist.suites.context import CheckContext
from vbdist.testdata import randomFunction, randomSection, randomTensorTerms
from vbdist.vdist import (CoordRep, TensorRep, coordDeviation, coordToTensor, directSum,
                          homToCoord, modMulVdist, naturalityDeviation, nuTensorToHom,
                          reduceViaTrivialization, toCoords, vdistDeviation)

logger = logging.getLogger(__name__)

# Number of random distributional sections per bundle or morphism.
N_ROUND_TRIP_INPUTS = 10
N_NATURALITY_INPUTS = 5


def _randomTensorRep(bundle: ProjectorBundle, rng: np.random.Generator, ctx: CheckContext,
                     nTerms: int = 3) -> TensorRep:
    return TensorRep(bundle, randomTensorTerms(bundle, rng, nTerms=nTerms, maxOrder=1,
                                               isComplex=ctx.isComplex))


def roundTrip(ctx: CheckContext) -> float:
    """ tensor → hom → coord → tensor preserves the pairings, for every test bundle.
    """
    rng = ctx.generator('roundTrip')
    deviation = 0.0
    for bundle in ctx.testBundles():
        for _ in range(N_ROUND_TRIP_INPUTS):
            u = _randomTensorRep(bundle, rng, ctx)
            back = coordToTensor(homToCoord(nuTensorToHom(u)))
            deviation = max(deviation, vdistDeviation(u, back, batterySize=ctx.batterySize,
                                                      seed=ctx.seed, isComplex=ctx.isComplex))
        logger.debug("roundTrip: {} done, deviation so far {:.3g}".format(bundle.label, deviation))
    return deviation


def reductionFormula(ctx: CheckContext) -> float:
    """ Inverting ν through the trivial ambient bundle recovers the distributional section.
    """
    rng = ctx.generator('reductionFormula')
    deviation = 0.0
    for bundle in ctx.testBundles():
        u = _randomTensorRep(bundle, rng, ctx)
        reduced = reduceViaTrivialization(nuTensorToHom(u))
        deviation = max(deviation, vdistDeviation(u, reduced, batterySize=ctx.batterySize,
                                                  seed=ctx.seed, isComplex=ctx.isComplex))
    return deviation


def nuLinearity(ctx: CheckContext) -> float:
    """ ν(f·u)(t) = f·ν(u)(t) and ℓ(f·t) = f·ℓ(t), tested with the distribution battery.
    """
    rng = ctx.generator('nuLinearity')
    deviation = 0.0
    for bundle in ctx.testBundles():
        m = bundle.base
        u = _randomTensorRep(bundle, rng, ctx)
        f = randomFunction(m, rng, isComplex=ctx.isComplex)
        t = randomSection(dual(bundle), rng, isComplex=ctx.isComplex)
        hom = nuTensorToHom(u)
        deviation = max(
            deviation,
            pairingDeviation(nuTensorToHom(modMulVdist(f, u)).evaluate(t), modMul(f, hom.evaluate(t)),
                             batterySize=ctx.batterySize, seed=ctx.seed),
            pairingDeviation(hom.evaluate(modMulSection(f, t)), modMul(f, hom.evaluate(t)),
                             batterySize=ctx.batterySize, seed=ctx.seed))
    return deviation


def balancednessBattery(ctx: CheckContext) -> List[Tuple[GridFunction, TensorRep]]:
    """ The (f, u) pairs of the balancedness suite, one per battery entry.

        Every u has a single term whose distribution leads with a point mass of order 1, so the
        derivative of f enters each comparison.
    """
    rng = ctx.generator('balancedness')
    bundles = ctx.testBundles()
    battery = []
    for nr in range(ctx.batterySize):
        bundle = bundles[nr % len(bundles)]
        u = TensorRep(bundle, randomTensorTerms(bundle, rng, nTerms=1, maxOrder=1,
                                                isComplex=ctx.isComplex, leadingMaxOrder=True))
        f = randomFunction(bundle.base, rng, isComplex=ctx.isComplex)
        battery.append((f, u))
    return battery


def balancedness(ctx: CheckContext) -> float:
    """ (f·s) ⊗ v and s ⊗ (f·v) are the same distributional section.
    """
    deviation = 0.0
    for f, u in balancednessBattery(ctx):
        deviation = max(deviation,
                        vdistDeviation(modMulVdist(f, u, scaleSections=True), modMulVdist(f, u),
                                       batterySize=ctx.batterySize, seed=ctx.seed,
                                       isComplex=ctx.isComplex))
    return deviation


def naturalityMorphisms(ctx: CheckContext) -> List[BundleMorphism]:
    """ identity, inclusion, projection, zero, the involution −1 of the Möbius bundle and a
        shear of the trivial rank 2 bundle.
    """
    m = ctx.circle()
    mob = mobius(m)
    triv = trivialBundle(m, 2)
    theta = m.coordinate(0)
    shear = np.zeros((m.nNodes, 2, 2))
    shear[:, 0, 0] = shear[:, 1, 1] = 1.0
    shear[:, 0, 1] = np.sin(theta)
    return [identityMorphism(mob),
            inclusion(mob),
            projection(mob),
            zeroMorphism(mob, triv),
            scaleMorphism(identityMorphism(mob), -1.0),
            morphismFromMatrices(triv, triv, shear, label="shear")]


def naturality(ctx: CheckContext) -> float:
    """ T′(μ) ∘ ν = ν ∘ T(μ) for every morphism of the naturality suite.
    """
    rng = ctx.generator('naturality')
    deviation = 0.0
    for mu in naturalityMorphisms(ctx):
        for _ in range(N_NATURALITY_INPUTS):
            u = _randomTensorRep(mu.source, rng, ctx)
            deviation = max(deviation, naturalityDeviation(mu, u, batterySize=ctx.batterySize,
                                                           seed=ctx.seed))
        logger.debug("naturality: {} done, deviation so far {:.3g}".format(mu.label, deviation))
    return deviation


def biproduct(ctx: CheckContext) -> float:
    """ The coordinates of (u, v) in E ⊕ F are the coordinates of u followed by those of v.
    """
    rng = ctx.generator('biproduct')
    m = ctx.circle()
    e = mobius(m)
    f = complement(e)
    deviation = 0.0
    for _ in range(N_NATURALITY_INPUTS):
        u = _randomTensorRep(e, rng, ctx)
        v = _randomTensorRep(f, rng, ctx)
        combined = toCoords(directSum(u, v))
        concatenated = CoordRep(whitneySum(e, f), toCoords(u).coords + toCoords(v).coords)
        deviation = max(deviation, coordDeviation(combined, concatenated,
                                                  batterySize=ctx.batterySize, seed=ctx.seed))
    return deviation


def homGeneratorExpansion(ctx: CheckContext) -> float:
    """ A HomRep is determined by its values on the dual generators: ℓ(t) = Σ_i t_i·ℓ(ε_i).
    """
    rng = ctx.generator('homGeneratorExpansion')
    deviation = 0.0
    for bundle in ctx.testBundles():
        hom = nuTensorToHom(_randomTensorRep(bundle, rng, ctx))
        onGenerators = [hom.evaluate(gen) for gen in dualGenerators(bundle)]
        for _ in range(N_ROUND_TRIP_INPUTS):
            t = randomSection(dual(bundle), rng, isComplex=ctx.isComplex)
            expansion = sumDistributions([modMul(t.component(i), value)
                                          for i, value in enumerate(onGenerators)], bundle.base)
            deviation = max(deviation, pairingDeviation(hom.evaluate(t), expansion,
                                                        batterySize=ctx.batterySize, seed=ctx.seed))
    return deviation
