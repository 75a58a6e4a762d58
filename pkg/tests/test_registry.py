#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests the invariant registry.

"""
import logging
import unittest

from vbdist.config.runconfig import DEFAULT_TOLERANCES, RunConfig
from vbdist.distributions import PointMass
from vbdist.reg.invariantreg import InvariantRegistry, InvariantRegItem, InvariantResult
from vbdist.suites.context import CheckContext
from vbdist.suites.vdistsuite import balancednessBattery


def _smallContext() -> CheckContext:
    config = RunConfig()
    config.resolution = 16
    return CheckContext(config)


def _alwaysRaises(ctx: CheckContext) -> float:
    raise ZeroDivisionError("no deviation")


def _notANumber(ctx: CheckContext) -> float:
    return float('nan')


class TestInvariantRegistry(unittest.TestCase):

    def setUp(self):
        logging.disable(logging.WARNING)
        self.registry = InvariantRegistry()

    def tearDown(self):
        logging.disable(logging.NOTSET)


    def testDefaultItems(self):
        names = [item.name for item in self.registry.items]
        self.assertEqual(len(names), len(set(names)))
        self.assertIn('vdist/round trip', names)
        self.assertIn('smoothing/oracle equivalence', names)

        groups = {item.group for item in self.registry.items}
        self.assertEqual(groups, {'geometry', 'bundles', 'sections', 'distributions', 'vdist',
                                  'smoothing'})
        for item in self.registry.items:
            self.assertIn(item.toleranceName, DEFAULT_TOLERANCES)
            self.assertIsNotNone(item.getFunction(), msg=item.absFunctionName)


    def testDuplicatesAreRefused(self):
        with self.assertRaises(ValueError):
            self.registry.registerItem(InvariantRegItem(
                'vdist/Round Trip', 'vbdist.suites.vdistsuite.roundTrip', 'stencil'))
        with self.assertRaises(TypeError):
            self.registry.registerItem(object())


    def testRunPassingInvariant(self):
        item = InvariantRegItem('geometry/derivative of constants',
                                'vbdist.suites.geometrysuite.derivOfConstants', 'exact')
        result = item.run(_smallContext())
        self.assertIsInstance(result, InvariantResult)
        self.assertTrue(result.passed)
        self.assertEqual(result.deviation, 0.0)
        self.assertEqual(result.tolerance, DEFAULT_TOLERANCES['exact'])
        self.assertEqual(result.asDict()['name'], 'geometry/derivative of constants')


    def testFailuresAreReported(self):
        ctx = _smallContext()

        item = InvariantRegItem('broken/import', 'vbdist.suites.nosuchsuite.invariant', 'exact')
        result = item.run(ctx)
        self.assertFalse(result.passed)
        self.assertIsNone(result.deviation)
        self.assertIn('Import failed', result.error)
        self.assertFalse(item.successfullyImported)

        item = InvariantRegItem('broken/raises', __name__ + '._alwaysRaises', 'exact')
        result = item.run(ctx)
        self.assertFalse(result.passed)
        self.assertIn('ZeroDivisionError', result.error)

        item = InvariantRegItem('broken/nan', __name__ + '._notANumber', 'exact')
        self.assertFalse(item.run(ctx).passed)


    def testToleranceIsTakenFromConfig(self):
        ctx = _smallContext()
        ctx.config.setTolerance('ratio', 1e-9)
        item = InvariantRegItem('geometry/derivative convergence',
                                'vbdist.suites.geometrysuite.derivConvergence', 'ratio')
        result = item.run(ctx)
        self.assertFalse(result.passed)
        self.assertGreater(result.deviation, 1e-9)
        self.assertEqual(result.tolerance, 1e-9)


class TestSuiteBatteries(unittest.TestCase):

    def testBalancednessBatteryHasFirstOrderMasses(self):
        ctx = _smallContext()
        battery = balancednessBattery(ctx)
        self.assertEqual(len(battery), ctx.batterySize)
        for f, u in battery:
            self.assertEqual(len(u.terms), 1)
            _, dist = u.terms[0]
            orders = [atom.order for atom in dist.atoms if isinstance(atom, PointMass)]
            self.assertIn(1, orders, msg=repr(u))
            self.assertIs(f.base, u.bundle.base)

        # Every test bundle takes part.
        used = {id(u.bundle) for _, u in battery}
        self.assertEqual(used, {id(bundle) for bundle in ctx.testBundles()})



if __name__ == '__main__':
    unittest.main()
