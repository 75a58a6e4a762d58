#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests functionality from the utils package

"""

import logging
import os.path
import tempfile
import unittest

import numpy as np

from vbdist.utils.cls import (asNumberArray, checkArrayShape, checkType, importSymbol, isAString,
                              readOnly)
from vbdist.utils.defs import InvalidInputError
from vbdist.utils.logs import DEFAULT_LOG_CONFIG, levelNumber, loadLogConfig
from vbdist.utils.misc import (formatFloat, parseFloatList, parseNameValue,
                               replaceStringsInDict, stringToIdentifier)


class TestStringTypeDetection(unittest.TestCase):
    """ Tests if the isAString function works
    """

    def setUp(self):
        self.b_lit = b'bytes literal'
        self.s_lit = 'literal literal'
        self.np_b_lit = np.bytes_(b'numpy bytes literal')
        self.np_s_lit = np.str_('numpy unicode literal')


    def test_is_a_string(self):
        self.assertFalse(isAString(self.b_lit))
        self.assertFalse(isAString(self.np_b_lit))

        self.assertTrue(isAString(self.s_lit))
        self.assertTrue(isAString(self.np_s_lit))

        self.assertFalse(isAString(None))
        self.assertTrue(isAString(None, allowNone=True))



class TestParsing(unittest.TestCase):

    def test_parse_float_list(self):
        self.assertEqual(parseFloatList('0.4,0.2,0.1'), [0.4, 0.2, 0.1])
        self.assertEqual(parseFloatList(' 1e-3 , 2 '), [0.001, 2.0])
        self.assertEqual(parseFloatList(''), [])

        with self.assertRaises(InvalidInputError):
            parseFloatList('0.4,,0.1')
        with self.assertRaises(InvalidInputError):
            parseFloatList('small')


    def test_parse_name_value(self):
        self.assertEqual(parseNameValue('stencil=1e-7'), ('stencil', 1e-7))
        self.assertEqual(parseNameValue(' ratio = 0.5'), ('ratio', 0.5))

        for text in ('stencil', '=1e-7', 'stencil=tiny'):
            with self.assertRaises(InvalidInputError):
                parseNameValue(text)


    def test_format_float(self):
        self.assertEqual(formatFloat(0.1), '0.10000000000000001')
        self.assertEqual(formatFloat(0.5), '0.5')
        self.assertEqual(float(formatFloat(np.pi)), np.pi)


    def test_string_to_identifier(self):
        self.assertEqual(stringToIdentifier('vdist/Round trip'), 'vdistround_trip')
        self.assertEqual(stringToIdentifier('leibniz-adjoint'), 'leibniz_adjoint')


    def test_replace_strings_in_dict(self):
        dct = {'a': ['$DIR/x', 3], 'b': {'c': '$DIR'}}
        self.assertEqual(replaceStringsInDict(dct, '$DIR', '/tmp'),
                         {'a': ['/tmp/x', 3], 'b': {'c': '/tmp'}})



class TestClassUtils(unittest.TestCase):

    def test_check_type(self):
        checkType(1.0, float)
        checkType(None, float, allowNone=True)
        with self.assertRaises(TypeError):
            checkType('1.0', float)


    def test_number_arrays(self):
        self.assertEqual(asNumberArray([1, 2]).dtype, np.float64)
        self.assertEqual(asNumberArray([1j]).dtype, np.complex128)
        with self.assertRaises(TypeError):
            asNumberArray(['a'])

        array = readOnly(np.zeros(3))
        with self.assertRaises(ValueError):
            array[0] = 1.0

        checkArrayShape(np.zeros((4, 2)), (None, 2))
        with self.assertRaises(InvalidInputError):
            checkArrayShape(np.zeros((4, 3)), (None, 2))
        with self.assertRaises(InvalidInputError):
            checkArrayShape(np.zeros(4), (None, 2))
        with self.assertRaises(TypeError):
            checkArrayShape([[0.0, 0.0]], (None, 2))


    def test_import_symbol(self):
        self.assertIs(importSymbol('vbdist.utils.misc.formatFloat'), formatFloat)
        with self.assertRaises(ImportError):
            importSymbol('formatFloat')
        with self.assertRaises(ImportError):
            importSymbol('vbdist.no_such_module.formatFloat')
        with self.assertRaises(AttributeError):
            importSymbol('vbdist.utils.misc.noSuchFunction')



class TestLogs(unittest.TestCase):

    def setUp(self):
        tmpDir = tempfile.TemporaryDirectory(prefix='vbdist_logs_')
        self.addCleanup(tmpDir.cleanup)
        self.tmpDir = tmpDir.name


    def _writeConfig(self, text):
        fileName = os.path.join(self.tmpDir, 'logging.json')
        with open(fileName, 'w', encoding='utf-8') as stream:
            stream.write(text)
        return fileName


    def test_level_number(self):
        self.assertEqual(levelNumber('Warning'), logging.WARNING)
        self.assertEqual(levelNumber(logging.DEBUG), logging.DEBUG)
        for level in ('verbose', True, None):
            with self.assertRaises(InvalidInputError):
                levelNumber(level)


    def test_default_config(self):
        logDir = os.path.join(self.tmpDir, 'logs')
        configDict = loadLogConfig(DEFAULT_LOG_CONFIG, logDir)
        self.assertEqual(configDict['handlers']['currentRunHandler']['filename'],
                         logDir + '/last_run.log')
        self.assertTrue(os.path.isdir(logDir))


    def test_malformed_config(self):
        with self.assertRaises(InvalidInputError):
            loadLogConfig(self._writeConfig('{"version": '), self.tmpDir)
        with self.assertRaises(InvalidInputError):
            loadLogConfig(self._writeConfig('[1]'), self.tmpDir)
        with self.assertRaises(InvalidInputError):
            loadLogConfig(os.path.join(self.tmpDir, 'missing.json'), self.tmpDir)



if __name__ == '__main__':
    unittest.main()
