#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests the representations of distributional sections and the conversions between them.

"""
import unittest

import numpy as np
import numpy.testing as npt

from vbdist.bundles import (complement, compose, dual, frameGenerators, identityMorphism,
                            inclusion, mobius, morphismFromMatrices, projection, summandInclusion,
                            summandProjection, trivialBundle, whitneySum)
from vbdist.distributions import delta, embedFunction, pair
from vbdist.geometry import GridFunction, makeCircle, makeInterval
from vbdist.sections import Section
from vbdist.testdata import (makeGenerator, randomFunction, randomSection, randomTensorTerms,
                             randomTestDensity)
from vbdist.utils.defs import MAX_TERMS, BundleMismatchError, ConsistencyError
from vbdist.vdist import (CoordRep, HomRep, TensorRep, addVdist, asSmoothSection,
                          canonicalizeCoords, coordPairings, coordToTensor, directSum, embedSection,
                          homToCoord, modMulVdist, naturalityCheck, naturalityDeviation,
                          nuTensorToHom, pairVdist, pushforwardVdist, reduceViaTrivialization,
                          scaleVdist, toCoords, toTensor, vdistDeviation, vdistEqual)

TOL = 1e-8


class TestRepresentations(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(32)
        self.mob = mobius(self.m)
        self.rng = makeGenerator(2024, label='test_representations')
        self.u = TensorRep(self.mob, randomTensorTerms(self.mob, self.rng, maxOrder=1))


    def testValidation(self):
        with self.assertRaises(BundleMismatchError):
            TensorRep(self.mob, [(randomSection(complement(self.mob), self.rng), delta(self.m, 3))])
        with self.assertRaises(BundleMismatchError):
            CoordRep(self.mob, [delta(self.m, 3)])

        gen = frameGenerators(self.mob)[0]
        with self.assertRaises(ConsistencyError):
            TensorRep(self.mob, [(gen, delta(self.m, 3))] * (MAX_TERMS + 1))


    def testRoundTrip(self):
        coords = toCoords(self.u)
        self.assertEqual(len(coords.coords), self.mob.ambientDim)
        self.assertTrue(vdistEqual(coordToTensor(coords), self.u, tol=TOL))
        self.assertTrue(vdistEqual(toTensor(coords), self.u, tol=TOL))

        # The coordinates are canonical: converting them again changes nothing.
        self.assertTrue(vdistEqual(toCoords(coords), coords, tol=TOL))


    def testRoundTripOnRepeatedSummand(self):
        doubled = whitneySum(self.mob, self.mob)
        self.assertEqual(doubled.rank, 2)
        u = TensorRep(doubled, randomTensorTerms(doubled, self.rng, maxOrder=1))
        coords = toCoords(u)
        self.assertEqual(len(coords.coords), doubled.ambientDim)
        self.assertTrue(vdistEqual(coordToTensor(coords), u, tol=TOL))
        self.assertTrue(vdistEqual(coordToTensor(homToCoord(nuTensorToHom(u))), u, tol=TOL))
        self.assertTrue(vdistEqual(reduceViaTrivialization(nuTensorToHom(u)), u, tol=TOL))


    def testCanonicalCoordinates(self):
        node = 7
        normal = randomSection(complement(self.mob), self.rng).values[node]
        transverse = CoordRep(self.mob, [delta(self.m, node, weight=normal[0]),
                                         delta(self.m, node, weight=normal[1])])
        self.assertLess(vdistDeviation(canonicalizeCoords(transverse), TensorRep(self.mob)), TOL)

        hom = nuTensorToHom(self.u)
        self.assertTrue(vdistEqual(homToCoord(hom), toCoords(self.u), tol=TOL))


    def testReduction(self):
        hom = nuTensorToHom(self.u)
        self.assertIsInstance(hom, HomRep)
        self.assertTrue(vdistEqual(reduceViaTrivialization(hom), self.u, tol=TOL))


    def testHomEvaluation(self):
        hom = nuTensorToHom(self.u)
        dualBundle = dual(self.mob)
        for _ in range(3):
            t = randomSection(dualBundle, self.rng)
            w = randomTestDensity(self.m, self.rng)
            self.assertAlmostEqual(pair(hom.evaluate(t), w), pairVdist(self.u, t, w), places=9)

        with self.assertRaises(BundleMismatchError):
            hom.evaluate(randomSection(self.mob, self.rng))


    def testHomFromFunction(self):
        hom = nuTensorToHom(self.u)
        rebuilt = HomRep.fromFunction(self.mob, hom.evaluate)
        self.assertTrue(vdistEqual(rebuilt, hom, tol=TOL))


    def testCoordsOfTrivialLineBundle(self):
        triv = trivialBundle(self.m, 1)
        v = delta(self.m, 4, order=1) + embedFunction(GridFunction.fromFunction(self.m, np.cos))
        u = TensorRep(triv, [(frameGenerators(triv)[0], v)])
        coord = toCoords(u).coords[0]
        self.assertEqual(len(coord.atoms), len(v.atoms))
        self.assertTrue(vdistEqual(CoordRep(triv, [coord]), CoordRep(triv, [v]), tol=1e-12))



class TestModuleAndFunctoriality(unittest.TestCase):

    def setUp(self):
        self.m = makeInterval(24)
        self.triv = trivialBundle(self.m, 2)
        self.rng = makeGenerator(5, label='test_module_and_functoriality')
        self.u = TensorRep(self.triv, randomTensorTerms(self.triv, self.rng, maxOrder=2))


    def testModuleActionOnEitherFactor(self):
        f = randomFunction(self.m, self.rng)
        onDists = modMulVdist(f, self.u)
        onSections = modMulVdist(f, self.u, scaleSections=True)
        self.assertTrue(vdistEqual(onDists, onSections, tol=TOL))

        coords = toCoords(self.u)
        self.assertTrue(vdistEqual(modMulVdist(f, coords), onDists, tol=TOL))


    def testLinearity(self):
        v = TensorRep(self.triv, randomTensorTerms(self.triv, self.rng, maxOrder=2))
        total = addVdist(scaleVdist(self.u, 2.0), v)
        viaCoords = addVdist(scaleVdist(toCoords(self.u), 2.0), toCoords(v))
        self.assertTrue(vdistEqual(total, viaCoords, tol=TOL))
        self.assertLess(vdistDeviation(addVdist(self.u, scaleVdist(self.u, -1.0)),
                                       TensorRep(self.triv)), TOL)


    def testNaturality(self):
        m = makeCircle(16)
        mob = mobius(m)
        u = TensorRep(mob, randomTensorTerms(mob, self.rng, maxOrder=1))
        self.assertLess(naturalityDeviation(inclusion(mob), u), TOL)
        self.assertTrue(naturalityCheck(inclusion(mob), u, tol=TOL))


    def testDirectSum(self):
        m = makeCircle(16)
        mob = mobius(m)
        comp = complement(mob)
        u = TensorRep(mob, randomTensorTerms(mob, self.rng))
        v = TensorRep(comp, randomTensorTerms(comp, self.rng))
        total = directSum(u, v)
        self.assertEqual(total.bundle.rank, 2)
        self.assertTrue(vdistEqual(pushforwardVdist(summandProjection(mob, comp, 0), total), u,
                                   tol=TOL))
        self.assertTrue(vdistEqual(pushforwardVdist(summandProjection(mob, comp, 1), total), v,
                                   tol=TOL))



class TestPushforward(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(16)
        self.mob = mobius(self.m)
        self.comp = complement(self.mob)
        self.triv = trivialBundle(self.m, 2)
        self.rng = makeGenerator(17, label='test_pushforward')
        self.u = TensorRep(self.mob, randomTensorTerms(self.mob, self.rng, maxOrder=1))
        self.v = TensorRep(self.comp, randomTensorTerms(self.comp, self.rng, maxOrder=1))

        theta = self.m.coordinate(0)
        shear = np.zeros((self.m.nNodes, 2, 2))
        shear[:, 0, 0] = shear[:, 1, 1] = 1.0
        shear[:, 0, 1] = np.sin(theta)
        self.shear = morphismFromMatrices(self.triv, self.triv, shear, label="shear")


    def testComposition(self):
        mu1 = inclusion(self.mob)
        mu2 = self.shear
        mu3 = projection(self.mob)
        for rep in (self.u, nuTensorToHom(self.u)):
            stepwise = pushforwardVdist(mu2, pushforwardVdist(mu1, rep))
            composed = pushforwardVdist(compose(mu2, mu1), rep)
            self.assertIsInstance(composed, type(rep))
            self.assertEqual(composed.bundle, self.triv)
            self.assertTrue(vdistEqual(composed, stepwise, tol=TOL))

            stepwise = pushforwardVdist(mu3, stepwise)
            composed = pushforwardVdist(compose(mu3, compose(mu2, mu1)), rep)
            self.assertEqual(composed.bundle, self.mob)
            self.assertTrue(vdistEqual(composed, stepwise, tol=TOL))


    def testIdentityIsFixed(self):
        for rep in (self.u, nuTensorToHom(self.u)):
            image = pushforwardVdist(identityMorphism(self.mob), rep)
            self.assertIsInstance(image, type(rep))
            self.assertTrue(vdistEqual(image, rep, tol=TOL))

        hom = nuTensorToHom(self.v)
        self.assertTrue(vdistEqual(pushforwardVdist(identityMorphism(self.comp), hom), hom,
                                   tol=TOL))


    def testInclusionThenProjection(self):
        for rep in (self.u, nuTensorToHom(self.u)):
            inAmbient = pushforwardVdist(inclusion(self.mob), rep)
            self.assertEqual(inAmbient.bundle, self.triv)
            back = pushforwardVdist(projection(self.mob), inAmbient)
            self.assertTrue(vdistEqual(back, rep, tol=TOL))

        for index, rep in ((0, self.u), (1, self.v)):
            for r in (rep, nuTensorToHom(rep)):
                incl = summandInclusion(self.mob, self.comp, index)
                proj = summandProjection(self.mob, self.comp, index)
                back = pushforwardVdist(proj, pushforwardVdist(incl, r))
                self.assertIsInstance(back, type(r))
                self.assertTrue(vdistEqual(back, r, tol=TOL))

        # The other summand is annihilated.
        other = pushforwardVdist(summandProjection(self.mob, self.comp, 1),
                                 pushforwardVdist(summandInclusion(self.mob, self.comp, 0),
                                                  nuTensorToHom(self.u)))
        self.assertLess(vdistDeviation(other, TensorRep(self.comp)), TOL)


    def testMismatchedSourceIsRefused(self):
        with self.assertRaises(BundleMismatchError):
            pushforwardVdist(inclusion(self.comp), self.u)
        with self.assertRaises(BundleMismatchError):
            pushforwardVdist(self.shear, nuTensorToHom(self.u))



class TestSmoothSectionsAndPairings(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(32)
        self.triv = trivialBundle(self.m, 1)
        self.rng = makeGenerator(11, label='test_smooth_sections')


    def testEmbedAndRecover(self):
        s = randomSection(mobius(self.m), self.rng)
        recovered = asSmoothSection(embedSection(s))
        npt.assert_allclose(recovered.values, s.values, atol=1e-15)

        gen = frameGenerators(self.triv)[0]
        self.assertIsNone(asSmoothSection(TensorRep(self.triv, [(gen, delta(self.m, 3))])))
        npt.assert_array_equal(asSmoothSection(TensorRep(self.triv)).values, 0.0)


    def testCoordPairingsOfDelta(self):
        gen = frameGenerators(self.triv)[0]
        u = TensorRep(self.triv, [(gen, delta(self.m, 5, weight=2.0))])
        pairings = coordPairings(toCoords(u))
        self.assertEqual(pairings.shape, (32, 1))
        expected = np.zeros(32)
        expected[5] = 2.0
        npt.assert_allclose(pairings[:, 0], expected, atol=1e-15)


    def testCoordPairingsSkipBoundary(self):
        m = makeInterval(20)
        triv = trivialBundle(m, 2)
        section = Section(triv, np.ones((20, 2)))
        pairings = coordPairings(toCoords(embedSection(section)))
        self.assertEqual(pairings.shape, (16, 2))
        npt.assert_allclose(pairings, m.weights[2:18, np.newaxis] * np.ones((16, 2)), atol=1e-15)



if __name__ == '__main__':
    unittest.main()
