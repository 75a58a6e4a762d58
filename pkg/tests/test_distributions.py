#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests scalar distributions: canonical form, pairing and multiplication by functions.

"""
import unittest

import numpy as np
import numpy.testing as npt

from vbdist.distributions import (PointMass, Regular, ScalarDistribution, delta, dualVector,
                                  embedFunction, equal, hatNodes, modMul, pair, pairingDeviation,
                                  sumDistributions, zeroDistribution)
from vbdist.geometry import GridFunction, TestDensity, deriv, makeCircle, makeInterval, product
from vbdist.testdata import (makeGenerator, randomDistribution, randomFunction,
                             randomTestDensity)
from vbdist.utils.defs import (MAX_ATOMS, BoundaryLayerError, BundleMismatchError,
                               ConsistencyError, InvalidInputError)


class TestCanonicalForm(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(32)


    def testPointMassesAreMerged(self):
        u = delta(self.m, 3) + delta(self.m, 3, weight=2.0) + delta(self.m, 5, order=1)
        self.assertEqual(len(u.atoms), 2)
        self.assertEqual(u.pointMasses[0], PointMass(3, 0, 3.0))
        self.assertEqual(u.pointMasses[1], PointMass(5, 1, 1.0))
        self.assertIsNone(u.regular)

        self.assertTrue((delta(self.m, 3) - delta(self.m, 3)).isZero)
        self.assertTrue(zeroDistribution(self.m).isZero)


    def testRegularAtomsAreAdded(self):
        f = GridFunction.fromFunction(self.m, np.sin)
        u = ScalarDistribution(self.m, [Regular(f), PointMass(2, 0, 1.0), Regular(f)])
        self.assertIsInstance(u.atoms[0], Regular)
        npt.assert_allclose(u.regular.values, 2 * f.values)

        # Regular atoms that cancel disappear.
        self.assertTrue((embedFunction(f) - embedFunction(f)).isZero)


    def testComplexWeights(self):
        u = delta(self.m, 4, weight=1 + 2j)
        self.assertIsInstance(u.pointMasses[0].weight, complex)
        w = TestDensity(self.m, np.cos(self.m.coordinate(0)))
        self.assertAlmostEqual(pair(u, w), (1 + 2j) * np.cos(self.m.coordinate(0)[4]))


    def testValidation(self):
        with self.assertRaises(InvalidInputError):
            delta(self.m, 32)
        with self.assertRaises(InvalidInputError):
            delta(self.m, 3, order=3)

        interval = makeInterval(16)
        delta(interval, 0)  # order zero is allowed in the boundary layer
        with self.assertRaises(BoundaryLayerError):
            delta(interval, 1, order=1)
        with self.assertRaises(BoundaryLayerError):
            delta(interval, 14, order=2)

        with self.assertRaises(InvalidInputError):
            delta(product(self.m, interval), 40, order=1)

        with self.assertRaises(BundleMismatchError):
            _ = delta(self.m, 3) + delta(makeCircle(16), 3)


    def testMaxAtoms(self):
        m = makeCircle(2 * MAX_ATOMS)
        sumDistributions([delta(m, node) for node in range(MAX_ATOMS)], m)
        with self.assertRaises(ConsistencyError):
            sumDistributions([delta(m, node) for node in range(MAX_ATOMS + 1)], m)



class TestPairing(unittest.TestCase):

    def setUp(self):
        self.circle = makeCircle(64)
        self.interval = makeInterval(33)
        self.rng = makeGenerator(42, label='test_pairing')


    def testPointMassPairing(self):
        m = self.circle
        w = TestDensity(m, np.sin(m.coordinate(0)))
        self.assertEqual(pair(delta(m, 10), w), w.values[10])
        self.assertAlmostEqual(pair(delta(m, 10, order=1), w), -deriv(m, w, 10, 1), places=14)
        self.assertAlmostEqual(pair(delta(m, 10, order=2), w), deriv(m, w, 10, 2), places=12)


    def testRegularPairing(self):
        m = self.circle
        f = GridFunction.fromFunction(m, np.cos)
        w = TestDensity(m, np.cos(m.coordinate(0)))
        self.assertAlmostEqual(pair(embedFunction(f), w), np.pi, places=12)


    def testDualVector(self):
        for m in (self.circle, self.interval):
            u = randomDistribution(m, self.rng, nPointMasses=3, maxOrder=2, isComplex=True)
            for _ in range(5):
                w = randomTestDensity(m, self.rng, isComplex=True)
                self.assertAlmostEqual(np.sum(dualVector(u) * w.values), pair(u, w), places=9)


    def testEquality(self):
        m = self.circle
        self.assertTrue(equal(delta(m, 7), delta(m, 7)))
        self.assertGreaterEqual(pairingDeviation(delta(m, 7), delta(m, 8)), 1.0)
        self.assertFalse(equal(delta(m, 7), delta(m, 8)))

        # On the interval the hat densities skip the boundary layers.
        self.assertEqual(list(hatNodes(self.interval)), list(range(2, 31)))



class TestModuleMultiplication(unittest.TestCase):

    def setUp(self):
        self.rng = makeGenerator(7, label='test_module_multiplication')


    def testRegular(self):
        m = makeCircle(32)
        f = randomFunction(m, self.rng)
        g = randomFunction(m, self.rng)
        result = modMul(g, embedFunction(f))
        npt.assert_allclose(result.regular.values, (g * f).values)


    def testOrderZero(self):
        m = makeCircle(32)
        g = randomFunction(m, self.rng)
        u = modMul(g, delta(m, 5, weight=2.0))
        self.assertEqual(len(u.atoms), 1)
        self.assertAlmostEqual(u.pointMasses[0].weight, 2.0 * g.values[5])


    def testLeibnizIsAdjoint(self):
        for m in (makeCircle(32), makeInterval(32)):
            for order in (1, 2):
                u = delta(m, 5, order=order, weight=1.5)
                g = randomFunction(m, self.rng, isComplex=True)
                for _ in range(5):
                    w = randomTestDensity(m, self.rng)
                    lhs = pair(modMul(g, u), w)
                    rhs = pair(u, w * g)
                    self.assertLess(abs(lhs - rhs), 1e-9)


    def testOperatorsAgree(self):
        m = makeInterval(32)
        u = randomDistribution(m, self.rng, maxOrder=2)
        g = randomFunction(m, self.rng)
        self.assertTrue(equal(u * g, modMul(g, u), tol=1e-12))
        self.assertTrue(equal(u * 2.0, u + u, tol=1e-12))


    def testAssociativity(self):
        m = makeCircle(32)
        u = randomDistribution(m, self.rng, maxOrder=2)
        f = randomFunction(m, self.rng)
        g = randomFunction(m, self.rng)
        self.assertTrue(equal(modMul(f * g, u), modMul(f, modMul(g, u)), tol=1e-8))



if __name__ == '__main__':
    unittest.main()
