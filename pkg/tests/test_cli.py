#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests the command line program: exit codes, output files and determinism.

"""
import argparse
import io
import json
import logging
import os
import os.path
import tempfile
import unittest

from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import numpy as np
import numpy.testing as npt

from vbdist.bundles import mobius
from vbdist.geometry import makeCircle
from vbdist.info import EXIT_CODE_COMMAND_ARGS, EXIT_CODE_ERROR, EXIT_CODE_SUCCESS, VERSION
from vbdist.main import main, makeConfig
from vbdist.reg.invariantreg import InvariantRegistry

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def _resetLogging():
    """ Removes the handlers that main installed. """
    rootLogger = logging.getLogger()
    for handler in list(rootLogger.handlers):
        rootLogger.removeHandler(handler)
        handler.close()


def _readLines(fileName):
    with open(fileName, 'r', encoding='utf-8', newline='') as stream:
        text = stream.read()
    assert '\r' not in text, "Unexpected carriage return in {}".format(fileName)
    assert text.endswith('\n'), "No trailing newline in {}".format(fileName)
    return text.splitlines()


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        tmpDir = tempfile.TemporaryDirectory(prefix='vbdist_cli_')
        self.addCleanup(tmpDir.cleanup)
        self.tmpDir = tmpDir.name

        envPatch = mock.patch.dict(os.environ,
                                   {'VBDIST_LOG_DIR': os.path.join(self.tmpDir, 'logs')})
        envPatch.start()
        self.addCleanup(envPatch.stop)
        self.addCleanup(_resetLogging)


    def _run(self, *args):
        """ Runs main with the given arguments. Returns exit code, stdout and stderr.
        """
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            exitCode = main(['-l', 'critical'] + list(args))
        return exitCode, stdout.getvalue(), stderr.getvalue()


    def _path(self, *parts):
        return os.path.join(self.tmpDir, *parts)


    def _writeScene(self, scene, fileName='scene.json'):
        path = self._path(fileName)
        with open(path, 'w', encoding='utf-8') as stream:
            if isinstance(scene, str):
                stream.write(scene)
            else:
                json.dump(scene, stream)
        return path


    def testVersion(self):
        exitCode, stdout, _ = self._run('--version')
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)
        self.assertIn(VERSION, stdout)

        exitCode, stdout, _ = self._run('--list-invariants')
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)
        self.assertIn('vdist/round trip', stdout.splitlines())


    def testUsageErrors(self):
        self.assertEqual(self._run()[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('frobnicate')[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('check', '--seed', 'abc')[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('check', '--resolution', '4')[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('check', '--tol', 'nonsense=1e-3')[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('regularize', '--eps', '0.4,x')[0], EXIT_CODE_COMMAND_ARGS)
        self.assertEqual(self._run('--log-config', self._path('no_such_config.json'), 'check')[0],
                         EXIT_CODE_COMMAND_ARGS)


    def testMalformedScene(self):
        scene = self._writeScene('{"manifold": {"kind": "circle", ')
        exitCode, _, stderr = self._run('check', '--scene', scene, '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_COMMAND_ARGS)
        self.assertIn('Malformed scene file', stderr)
        self.assertFalse(os.path.exists(self._path('out', 'check_report.json')))

        scene = self._writeScene({"bundle": {"kind": "klein"}})
        exitCode, _, _ = self._run('coords', '--scene', scene, '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_COMMAND_ARGS)


    def testCheckReportIsDeterministic(self):
        reports = []
        for outDir in ('run1', 'run2'):
            exitCode, _, stderr = self._run('check', '--seed', '0x2A', '--resolution', '16',
                                            '--tol', 'ratio=1e-9', '--out', self._path(outDir))
            self.assertEqual(exitCode, EXIT_CODE_ERROR)
            self.assertIn('FAILED: smoothing/convergence ratios', stderr)
            with open(self._path(outDir, 'check_report.json'), 'rb') as stream:
                reports.append(stream.read())

        self.assertEqual(reports[0], reports[1])

        report = json.loads(reports[0].decode('utf-8'))
        self.assertEqual(report['_program'], 'VbDist')
        self.assertEqual(report['_version'], VERSION)
        self.assertFalse(report['passed'])
        self.assertIn('smoothing/convergence ratios', report['failed'])
        self.assertEqual(report['config']['seed'], 42)
        self.assertEqual(report['config']['tolerances']['ratio'], 1e-9)
        self.assertNotIn('outputDir', report['config'])
        self.assertEqual(len(report['invariants']), len(InvariantRegistry().items))
        _readLines(self._path('run1', 'check_report.json'))


    def testCoordsOfDelta(self):
        scene = self._writeScene({
            "manifold": {"kind": "circle", "n": 16},
            "bundle": {"kind": "trivial", "rank": 1},
            "vdist": {"terms": [{"section": {"kind": "frame", "index": 0},
                                 "distribution": {"atoms": [{"kind": "delta", "node": 5,
                                                             "weight": 2.0}]}}]}})
        exitCode, _, _ = self._run('coords', '--scene', scene, '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)

        lines = _readLines(self._path('out', 'coords_0.csv'))
        self.assertEqual(lines[0], 'node,x0,pairing')
        self.assertEqual(len(lines), 1 + 16)
        for nr, line in enumerate(lines[1:]):
            node, _, pairing = [float(field) for field in line.split(',')]
            self.assertEqual(node, nr)
            self.assertEqual(pairing, 2.0 if nr == 5 else 0.0)


    def testCoordsGoldenFiles(self):
        scene = os.path.join(DATA_DIR, 'coords_scene.json')
        exitCode, _, _ = self._run('coords', '--scene', scene, '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)
        for fileName in ('coords_0.csv', 'coords_1.csv'):
            with open(os.path.join(DATA_DIR, fileName), 'rb') as stream:
                expected = stream.read()
            with open(self._path('out', fileName), 'rb') as stream:
                self.assertEqual(stream.read(), expected, msg=fileName)


    def testCoordsDefaultScene(self):
        for outDir in ('run1', 'run2'):
            exitCode, _, _ = self._run('coords', '--out', self._path(outDir))
            self.assertEqual(exitCode, EXIT_CODE_SUCCESS)

        # frame 0 ⊗ δ at x=1 plus sin·(frame 1) ⊗ 1, on the Möbius bundle over the circle.
        m = makeCircle(128)
        theta = m.coordinate(0)
        proj = mobius(m).proj
        node = int(np.argmin(np.abs(theta - 1.0)))
        for i in range(2):
            fileName = 'coords_{}.csv'.format(i)
            with open(self._path('run1', fileName), 'rb') as stream1, \
                    open(self._path('run2', fileName), 'rb') as stream2:
                self.assertEqual(stream1.read(), stream2.read(), msg=fileName)

            lines = _readLines(self._path('run1', fileName))
            self.assertEqual(lines[0], 'node,x0,pairing')
            table = np.array([[float(field) for field in line.split(',')] for line in lines[1:]])
            self.assertEqual(table.shape, (128, 3))
            npt.assert_array_equal(table[:, 0], np.arange(128))
            npt.assert_array_equal(table[:, 1], theta)

            expected = m.weights * np.sin(theta) * proj[:, i, 1]
            expected[node] += proj[node, i, 0]
            npt.assert_allclose(table[:, 2], expected, rtol=0, atol=1e-12)


    def testRegularize(self):
        scene = self._writeScene({
            "manifold": {"kind": "circle", "n": 64},
            "vdist": {"terms": [{"section": {"kind": "frame", "f": {"kind": "sin"}},
                                 "distribution": {"atoms": [{"kind": "regular"}]}}]}})
        exitCode, _, _ = self._run('regularize', '--scene', scene, '--eps', '1.0,0.5',
                                   '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)

        lines = _readLines(self._path('out', 'convergence.csv'))
        self.assertEqual(lines[0], 'eps,sup_error')
        rows = [[float(field) for field in line.split(',')] for line in lines[1:]]
        self.assertEqual([row[0] for row in rows], [1.0, 0.5])
        self.assertLess(rows[1][1], rows[0][1])

        lines = _readLines(self._path('out', 'section_eps_0.5.csv'))
        self.assertEqual(lines[0], 'x0,s0')
        self.assertEqual(len(lines), 1 + 64)
        self.assertTrue(os.path.exists(self._path('out', 'section_eps_1.csv')))


    def testRegularizeWithoutWidths(self):
        exitCode, _, _ = self._run('regularize', '--eps', '', '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)
        with open(self._path('out', 'convergence.csv'), 'rb') as stream:
            self.assertEqual(stream.read(), b'eps,sup_error\n')


    def testRegularizeDistribution(self):
        scene = self._writeScene({
            "manifold": {"kind": "circle", "n": 32},
            "vdist": {"terms": [{"section": {"kind": "frame"},
                                 "distribution": {"atoms": [{"kind": "delta", "node": 3}]}}]}})
        exitCode, _, _ = self._run('regularize', '--scene', scene, '--eps', '1.0',
                                   '--out', self._path('out'))
        self.assertEqual(exitCode, EXIT_CODE_SUCCESS)
        self.assertFalse(os.path.exists(self._path('out', 'convergence.csv')))
        self.assertTrue(os.path.exists(self._path('out', 'section_eps_1.csv')))


    def testCommandLineOverridesSceneConfig(self):
        scene = self._writeScene({"config": {"seed": 7, "resolution": 16, "field": "complex"}})
        args = argparse.Namespace(scene=scene, seed=9, resolution=None, field=None,
                                  outputDir=self._path('out'), tolerances=['stencil=1e-6'])
        config, sceneSpec = makeConfig(args)
        self.assertEqual(config.seed, 9)
        self.assertEqual(config.resolution, 16)
        self.assertTrue(config.isComplex)
        self.assertEqual(config.tolerance('stencil'), 1e-6)
        self.assertEqual(config.scene, scene)
        self.assertEqual(sceneSpec["config"]["seed"], 7)



if __name__ == '__main__':
    unittest.main()
