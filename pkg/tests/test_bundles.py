#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests the projector bundles and their morphisms.

"""
import unittest

import numpy as np
import numpy.testing as npt

from vbdist.bundles import (BundleMorphism, ProjectorBundle, checkIsDualPair, checkSameBundle,
                            complement, compose, dual, dualGenerators, externalTensor,
                            frameGenerators, identityMorphism, inclusion, mobius,
                            morphismFromMatrices, projection, scaleMorphism, summandInclusion,
                            summandProjection, sumMorphism, tensor, tensorMorphism, trivialBundle,
                            whitneySum, zeroMorphism)
from vbdist.geometry import GridFunction, makeCircle, makeInterval
from vbdist.sections import Section, pushforward
from vbdist.utils.defs import (BundleMismatchError, ConsistencyError, FiberError,
                               InvalidInputError)


class TestProjectorBundles(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(32)
        self.mob = mobius(self.m)


    def testTrivial(self):
        triv = trivialBundle(self.m, 3)
        self.assertEqual(triv.rank, 3)
        self.assertEqual(triv.ambientDim, 3)
        npt.assert_array_equal(triv.proj[5], np.eye(3))
        self.assertFalse(triv.isDual)

        with self.assertRaises(InvalidInputError):
            trivialBundle(self.m, -1)


    def testMobius(self):
        self.assertEqual(self.mob.rank, 1)
        self.assertEqual(self.mob.ambientDim, 2)
        npt.assert_allclose(self.mob.proj[0], [[1.0, 0.0], [0.0, 0.0]], atol=1e-15)

        # The projector is periodic although its range turns by half a revolution.
        npt.assert_allclose(self.mob.proj[-1], self.mob.proj[0], atol=0.2)

        with self.assertRaises(InvalidInputError):
            mobius(makeInterval(16))


    def testValidation(self):
        notIdempotent = np.broadcast_to(2 * np.eye(2), (self.m.nNodes, 2, 2))
        with self.assertRaises(ConsistencyError):
            ProjectorBundle(self.m, notIdempotent)

        # Rank jumps from 1 to 0 halfway.
        proj = np.zeros((self.m.nNodes, 1, 1))
        proj[:16] = 1.0
        with self.assertRaises(ConsistencyError):
            ProjectorBundle(self.m, proj)

        # A rotating projector that turns too fast is not smooth.
        theta = 10 * self.m.coordinate(0)
        v = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        with self.assertRaises(ConsistencyError):
            ProjectorBundle(self.m, np.einsum('xi,xj->xij', v, v), smoothnessConstant=1.0)

        with self.assertRaises(InvalidInputError):
            ProjectorBundle(self.m, np.zeros((self.m.nNodes, 2, 3)))
        with self.assertRaises(InvalidInputError):
            ProjectorBundle(self.m, np.zeros((self.m.nNodes - 1, 2, 2)))
        with self.assertRaises(InvalidInputError):
            BundleMorphism(self.mob, self.mob, np.zeros((self.m.nNodes, 2, 1)))


    def testComplementAndDualAreInvolutions(self):
        comp = complement(self.mob)
        self.assertEqual(comp.rank, 1)
        npt.assert_allclose(self.mob.proj + comp.proj, np.broadcast_to(np.eye(2), comp.proj.shape),
                            atol=1e-15)
        self.assertIs(complement(comp), self.mob)

        mobDual = dual(self.mob)
        self.assertTrue(mobDual.isDual)
        self.assertTrue(mobDual.sameFibers(self.mob))
        self.assertNotEqual(mobDual, self.mob)
        self.assertIs(dual(mobDual), self.mob)
        checkIsDualPair(self.mob, mobDual)

        with self.assertRaises(BundleMismatchError):
            checkIsDualPair(self.mob, self.mob)
        with self.assertRaises(BundleMismatchError):
            checkSameBundle(self.mob, comp)


    def testConstructions(self):
        comp = complement(self.mob)
        total = whitneySum(self.mob, comp)
        self.assertEqual(total.rank, 2)
        self.assertEqual(total.ambientDim, 4)

        tens = tensor(self.mob, self.mob)
        self.assertEqual(tens.rank, 1)
        self.assertEqual(tens.ambientDim, 4)

        external = externalTensor(self.mob, trivialBundle(makeInterval(8), 2))
        self.assertEqual(external.base.nNodes, 32 * 8)
        self.assertEqual(external.rank, 2)
        self.assertEqual(external.ambientDim, 4)

        with self.assertRaises(BundleMismatchError):
            whitneySum(self.mob, trivialBundle(makeCircle(16), 1))


    def testGenerators(self):
        gens = frameGenerators(self.mob)
        self.assertEqual(len(gens), 2)
        for gen in gens:
            self.assertIsInstance(gen, Section)
            self.assertIs(gen.bundle, self.mob)

        dualGens = dualGenerators(self.mob)
        self.assertTrue(all(gen.bundle.isDual for gen in dualGens))



class TestMorphisms(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(16)
        self.mob = mobius(self.m)
        self.triv = trivialBundle(self.m, 2)


    def testInclusionAndProjection(self):
        incl = inclusion(self.mob)
        proj = projection(self.mob)
        self.assertEqual(incl.target, self.triv)
        roundTrip = compose(proj, incl)
        npt.assert_allclose(roundTrip.maps, identityMorphism(self.mob).maps, atol=1e-15)

        with self.assertRaises(BundleMismatchError):
            compose(incl, incl)


    def testFiberCheck(self):
        with self.assertRaises(FiberError):
            BundleMorphism(self.mob, self.mob, np.broadcast_to(np.eye(2), (16, 2, 2)))

        raw = np.broadcast_to(np.eye(2), (16, 2, 2))
        mu = morphismFromMatrices(self.triv, self.mob, raw)
        npt.assert_allclose(mu.maps, projection(self.mob).maps)


    def testScaleAndZero(self):
        ident = identityMorphism(self.mob)
        npt.assert_allclose(scaleMorphism(ident, -1.0).maps, -ident.maps)

        f = GridFunction.fromFunction(self.m, np.cos)
        scaled = scaleMorphism(ident, f)
        npt.assert_allclose(scaled.maps[3], np.cos(self.m.coordinate(0)[3]) * ident.maps[3])

        zero = zeroMorphism(self.mob, self.triv)
        self.assertEqual(zero.maps.shape, (16, 2, 2))
        self.assertFalse(np.any(zero.maps))


    def testFunctorsOnMorphisms(self):
        ident = identityMorphism(self.mob)
        total = sumMorphism(ident, identityMorphism(self.triv))
        npt.assert_array_equal(total.maps, identityMorphism(whitneySum(self.mob, self.triv)).maps)

        tens = tensorMorphism(ident, ident)
        npt.assert_allclose(tens.maps, identityMorphism(tensor(self.mob, self.mob)).maps,
                            atol=1e-15)


    def testBiproduct(self):
        comp = complement(self.mob)
        for index, summand in enumerate((self.mob, comp)):
            incl = summandInclusion(self.mob, comp, index)
            proj = summandProjection(self.mob, comp, index)
            npt.assert_allclose(compose(proj, incl).maps, identityMorphism(summand).maps,
                                atol=1e-15)

        # The projections annihilate the other summand.
        cross = compose(summandProjection(self.mob, comp, 1), summandInclusion(self.mob, comp, 0))
        npt.assert_allclose(cross.maps, 0.0, atol=1e-15)

        with self.assertRaises(InvalidInputError):
            summandInclusion(self.mob, comp, 2)


    def testPushforwardOfGenerators(self):
        incl = inclusion(self.mob)
        for gen in frameGenerators(self.mob):
            pushed = pushforward(incl, gen)
            npt.assert_allclose(pushed.values, gen.values, atol=1e-15)



if __name__ == '__main__':
    unittest.main()
