#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import os
import shutil
import tempfile
import unittest

from kostant_whittaker.exactalg import MultiPoly, RatFunc
from kostant_whittaker.exactalg.linalg import mat_is_zero
from kostant_whittaker.uhbar import MODULE_VARIABLES


class BaseTestCase(unittest.TestCase):

    cache_dir = None

    @classmethod
    def setUpClass(cls):
        # Never touch the user's cache from a test run
        cls.cache_dir = tempfile.mkdtemp(prefix='kw-test-')
        os.environ['KW_CACHE'] = cls.cache_dir

    @staticmethod
    def x():
        return MultiPoly.gen(MODULE_VARIABLES, 'x')

    @staticmethod
    def hbar():
        return MultiPoly.gen(MODULE_VARIABLES, 'hbar')

    @staticmethod
    def poly(value):
        return MultiPoly.constant(MODULE_VARIABLES, value)

    def assertRatFuncEqual(self, first, second):
        """
        Equality after lifting both sides to the fraction field
        """
        first = RatFunc.lift(first, MODULE_VARIABLES)
        second = RatFunc.lift(second, MODULE_VARIABLES)
        self.assertTrue(first == second, '%s != %s' % (first, second))

    def assertCoefficients(self, found, expected):
        """
        Two dicts of rational functions agree key by key
        """
        self.assertEqual(sorted(found), sorted(expected))
        for key in expected:
            self.assertRatFuncEqual(found[key], expected[key])

    def assertMatrixZero(self, matrix):
        self.assertTrue(mat_is_zero(matrix), 'Matrix is not zero: %s' % [[str(e) for e in row] for row in matrix])

    def assertPolynomialMatrix(self, matrix):
        for row in matrix:
            for entry in row:
                self.assertTrue(RatFunc.lift(entry, MODULE_VARIABLES).is_polynomial, '%s is not a polynomial' % entry)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.cache_dir, ignore_errors=True)
        os.environ.pop('KW_CACHE', None)
