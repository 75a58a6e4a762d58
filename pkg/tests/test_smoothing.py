#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests the scalar and vector valued smoothing operators.

"""
import unittest

import numpy as np
import numpy.testing as npt

from vbdist.bundles import mobius, trivialBundle
from vbdist.distributions import delta, embedFunction
from vbdist.geometry import GridFunction, makeCircle, makeInterval, product
from vbdist.sections import Section
from vbdist.sections import modMul as modMulSection
from vbdist.smoothing import (ConvergenceRow, ScalarSmoothingKernel, SmoothingOperator,
                              VectorKernel, applyScalar, applyVector, balancedMoveCheck,
                              balancedMoveDeviation, combinedKernel, convergenceStudy, directApply,
                              directKernelApply, errorRatios, homToOperator, mollifier,
                              mollifierOperator, operatorToHom, projectionKernel, scaleTarget)
from vbdist.suites.smoothingsuite import randomScalarKernel, randomVectorKernel
from vbdist.testdata import cutoff, makeGenerator, randomSmoothValues, randomTensorTerms
from vbdist.utils.defs import (BoundaryLayerError, BundleMismatchError, ConsistencyError,
                               FiberError, InvalidInputError)
from vbdist.vdist import TensorRep, embedSection


class TestScalarSmoothing(unittest.TestCase):

    def setUp(self):
        self.m = makeCircle(64)
        self.kappa = mollifier(self.m, 0.5)


    def testMollifierIsNormalized(self):
        self.assertTrue(self.kappa.normalized)
        npt.assert_allclose(self.m.weights @ self.kappa.values, 1.0, atol=1e-12)
        one = embedFunction(GridFunction.constant(self.m))
        npt.assert_allclose(applyScalar(self.kappa, one).values, 1.0, atol=1e-12)


    def testMollifierWidth(self):
        with self.assertRaises(InvalidInputError):
            mollifier(self.m, 0.1)

        # The periodic distance makes the kernel symmetric around the seam.
        npt.assert_allclose(self.kappa.values[0, 1], self.kappa.values[0, 63], rtol=1e-12)


    def testKernelValidation(self):
        with self.assertRaises(InvalidInputError):
            ScalarSmoothingKernel(self.m, self.m, np.ones((64, 63)))
        with self.assertRaises(ConsistencyError):
            ScalarSmoothingKernel(self.m, self.m, np.ones((64, 64)), normalized=True)


    def testDeltaGivesKernelSlice(self):
        npt.assert_allclose(applyScalar(self.kappa, delta(self.m, 7)).values,
                            self.kappa.values[7])

        h = self.m.spacing[0]
        derivative = applyScalar(self.kappa, delta(self.m, 7, order=1)).values
        expected = -(self.kappa.values[8] - self.kappa.values[6]) / (2 * h)
        npt.assert_allclose(derivative, expected, rtol=1e-12, atol=1e-14)


    def testSmoothness(self):
        self.assertTrue(self.kappa.isSmooth(10.0))
        self.assertGreater(self.kappa.smoothnessRatio(), 0.0)


    def testLinearity(self):
        rng = makeGenerator(3, label='test_scalar_linearity')
        kappa = randomScalarKernel(self.m, self.m, rng)
        u = delta(self.m, 3, order=2) + embedFunction(GridFunction.fromFunction(self.m, np.sin))
        v = delta(self.m, 40, order=1, weight=-2.0)
        lhs = applyScalar(kappa, u * 0.5 + v * 3.0).values
        rhs = 0.5 * applyScalar(kappa, u).values + 3.0 * applyScalar(kappa, v).values
        npt.assert_allclose(lhs, rhs, atol=1e-10)



class TestVectorSmoothing(unittest.TestCase):

    def setUp(self):
        m = makeCircle(16)
        self.e = mobius(m)
        self.f = trivialBundle(m, 2)
        self.rng = makeGenerator(17, label='test_vector_smoothing')
        self.kernel = randomVectorKernel(self.e, self.f, self.rng)
        self.kappa = randomScalarKernel(m, m, self.rng)
        self.op = SmoothingOperator(self.e, self.f, [(self.kernel, self.kappa)])
        self.u = TensorRep(self.e, randomTensorTerms(self.e, self.rng, maxOrder=1))


    def testKernelValidation(self):
        with self.assertRaises(FiberError):
            VectorKernel(self.e, self.f, np.ones((16, 16, 2, 2)))
        with self.assertRaises(InvalidInputError):
            VectorKernel(self.e, self.f, np.ones((16, 16, 2, 3)))
        with self.assertRaises(BundleMismatchError):
            SmoothingOperator(self.f, self.f, [(self.kernel, self.kappa)])
        with self.assertRaises(TypeError):
            SmoothingOperator(self.e, self.f, None)
        with self.assertRaises(BundleMismatchError):
            projectionKernel(self.e, trivialBundle(self.e.base, 1))


    def testKernelAsSection(self):
        section = self.kernel.toSection()
        rebuilt = VectorKernel.fromSection(self.e, self.f, section)
        npt.assert_array_equal(rebuilt.values, self.kernel.values)


    def testAgreesWithDirectPairing(self):
        viaSplitting = applyVector(self.op, self.u)
        viaPairing = directApply(self.op, self.u)
        self.assertIs(viaSplitting.bundle, self.f)
        npt.assert_allclose(viaSplitting.values, viaPairing.values, atol=1e-9)


    def testDirectPairingOnInterval(self):
        m = makeInterval(20)
        e = trivialBundle(m, 1)
        kernel = randomVectorKernel(e, e, self.rng)
        kappa = randomScalarKernel(m, m, self.rng)
        u = TensorRep(e, randomTensorTerms(e, self.rng, maxOrder=1))
        with self.assertRaises(BoundaryLayerError):
            directKernelApply(kernel, kappa, u)

        clipped = ScalarSmoothingKernel(m, m, kappa.values * cutoff(m)[:, np.newaxis])
        viaPairing = directKernelApply(kernel, clipped, u)
        viaSplitting = applyVector(SmoothingOperator(e, e, [(kernel, clipped)]), u)
        npt.assert_allclose(viaSplitting.values, viaPairing.values, atol=1e-9)


    def testDeltaGivesKernelSlice(self):
        s = Section.project(self.e, np.ones((16, 2)))
        result = applyVector(self.op, TensorRep(self.e, [(s, delta(self.e.base, 4))]))
        expected = self.kappa.values[4][:, np.newaxis] * \
            np.einsum('yca,a->yc', self.kernel.values[4], s.values[4])
        npt.assert_allclose(result.values, expected, atol=1e-12)


    def testBalancedMove(self):
        mn = product(self.e.base, self.f.base)
        factor = GridFunction(mn, randomSmoothValues(mn, self.rng))
        self.assertLess(balancedMoveDeviation(self.op, factor, self.u), 1e-8)
        self.assertTrue(balancedMoveCheck(self.op, factor, self.u, tol=1e-8))


    def testTargetModule(self):
        b = GridFunction.fromFunction(self.f.base, np.cos)
        lhs = modMulSection(b, applyVector(self.op, self.u))
        rhs = applyVector(scaleTarget(self.op, b), self.u)
        npt.assert_allclose(lhs.values, rhs.values, atol=1e-10)


    def testOperatorAsModuleMap(self):
        op = SmoothingOperator(self.e, self.f, [
            (self.kernel, self.kappa),
            (randomVectorKernel(self.e, self.f, self.rng),
             randomScalarKernel(self.e.base, self.f.base, self.rng))])
        rebuilt = homToOperator(operatorToHom(op))
        npt.assert_allclose(applyVector(rebuilt, self.u).values, applyVector(op, self.u).values,
                            atol=1e-9)
        npt.assert_allclose(combinedKernel(rebuilt), combinedKernel(op), atol=1e-10)


    def testCombinedKernel(self):
        combined = combinedKernel(self.op)
        self.assertEqual(combined.shape, (16, 16, 2, 2))
        npt.assert_allclose(combined,
                            self.kappa.values[:, :, np.newaxis, np.newaxis] * self.kernel.values)


    def testEmptyInputs(self):
        npt.assert_array_equal(applyVector(self.op, TensorRep(self.e)).values, 0.0)
        empty = SmoothingOperator(self.e, self.f)
        npt.assert_array_equal(applyVector(empty, self.u).values, 0.0)



class TestConvergence(unittest.TestCase):

    def testConstantSectionIsReproduced(self):
        m = makeInterval(64)
        triv = trivialBundle(m, 2)
        constant = Section(triv, np.ones((64, 2)))
        op = mollifierOperator(triv, 0.1)
        result = applyVector(op, embedSection(constant))
        npt.assert_allclose(result.values, 1.0, atol=1e-12)


    def testErrorsShrinkQuadratically(self):
        m = makeCircle(256)
        triv = trivialBundle(m, 1)
        reference = Section(triv, np.sin(m.coordinate(0))[:, np.newaxis])
        rows = convergenceStudy([0.4, 0.2, 0.1], embedSection(reference), reference=reference)
        self.assertEqual([row.eps for row in rows], [0.4, 0.2, 0.1])

        ratios = errorRatios(rows)
        self.assertEqual(len(ratios), 2)
        for ratio in ratios:
            self.assertGreater(ratio, 3.2)
            self.assertLess(ratio, 4.8)


    def testWithoutReference(self):
        m = makeCircle(32)
        triv = trivialBundle(m, 1)
        gen = Section(triv, np.ones((32, 1)))
        rows = convergenceStudy([1.0], TensorRep(triv, [(gen, delta(m, 3))]))
        self.assertIsNone(rows[0].supError)
        with self.assertRaises(InvalidInputError):
            errorRatios(rows)

        self.assertEqual(convergenceStudy([], embedSection(gen)), [])
        self.assertEqual(errorRatios([ConvergenceRow(0.5, 1.0, gen)]), [])


    def testZeroErrorGivesNan(self):
        m = makeCircle(8)
        gen = Section(trivialBundle(m, 1), np.ones((8, 1)))
        rows = [ConvergenceRow(eps, err, gen) for eps, err in
                ((0.4, 0.4), (0.2, 0.1), (0.1, 0.0), (0.05, 0.0))]
        with self.assertLogs('vbdist.smoothing', level='WARNING'):
            ratios = errorRatios(rows)
        self.assertEqual(len(ratios), 3)
        self.assertAlmostEqual(ratios[0], 4.0, places=12)
        self.assertTrue(np.isnan(ratios[1]))
        self.assertTrue(np.isnan(ratios[2]))

        # A vanishing numerator is fine.
        self.assertEqual(errorRatios([ConvergenceRow(0.2, 0.0, gen),
                                      ConvergenceRow(0.1, 0.5, gen)]), [0.0])



if __name__ == '__main__':
    unittest.main()
