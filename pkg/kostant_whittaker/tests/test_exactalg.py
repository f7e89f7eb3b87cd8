#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import itertools
import unittest

from hypothesis import given, settings, strategies as st

from kostant_whittaker.exactalg import (
    MultiPoly, RatFunc, solve_linear, matrix_rank, determinant, jordan_type, free_graded_hilbert, Grading,
    HilbertSeries, to_rational
)
from kostant_whittaker.exactalg.linalg import mat_inverse, mat_mul, mat_apply, identity, mat_sub, _substitute_back
from kostant_whittaker.exactalg.ratfunc import fraction_field
from kostant_whittaker.lib.errors import (
    DivisionByZeroError, NotDivisibleError, InconsistentSystemError, VariableMismatchError, GradingError,
    IdentityFailure
)
from kostant_whittaker.uhbar import MODULE_VARIABLES
from kostant_whittaker.tests import BaseTestCase
from kostant_whittaker.tests.strategies import polys, nonzero_polys, polynomial_systems


class TestMultiPoly(BaseTestCase):

    def test_arithmetic(self):
        x, hbar = self.x(), self.hbar()
        self.assertEqual((x + hbar) * (x - hbar), x * x - hbar * hbar)
        self.assertEqual((x + 1) ** 2, x * x + 2 * x + 1)

    def test_rational_coefficients_are_exact(self):
        half = MultiPoly.constant(MODULE_VARIABLES, '1/2')
        self.assertEqual(half + half, 1)
        self.assertEqual(to_rational('3/6'), to_rational('1/2'))

    def test_exquo(self):
        x, hbar = self.x(), self.hbar()
        self.assertEqual((x * x - hbar * hbar).exquo(x + hbar), x - hbar)
        with self.assertRaises(NotDivisibleError):
            (x * x + 1).exquo(x + hbar)

    def test_variable_mismatch(self):
        other = MultiPoly.gen(('hbar',), 'hbar')
        with self.assertRaises(VariableMismatchError):
            self.x() + other

    def test_coerce_into_larger_ring(self):
        other = MultiPoly.gen(('hbar',), 'hbar')
        self.assertEqual(other.coerce(MODULE_VARIABLES), self.hbar())

    def test_subs_and_evaluate(self):
        x, hbar = self.x(), self.hbar()
        p = x * x + hbar
        self.assertEqual(p.subs('x', hbar), hbar * hbar + hbar)
        self.assertEqual(p.evaluate({'x': 2, 'hbar': 3}), 7)

    def test_json(self):
        p = MultiPoly.constant(MODULE_VARIABLES, '1/2') * self.x() + self.hbar()
        self.assertEqual(MultiPoly.from_json(p.to_json()), p)

    @given(polys(MODULE_VARIABLES), polys(MODULE_VARIABLES), polys(MODULE_VARIABLES))
    @settings(max_examples=50, deadline=None)
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)


class TestRatFunc(BaseTestCase):

    def test_cross_multiplication_equality(self):
        x, hbar = self.x(), self.hbar()
        a = RatFunc.from_polys(x * x - hbar * hbar, x + hbar)
        self.assertTrue(a.is_polynomial)
        self.assertRatFuncEqual(a, x - hbar)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZeroError):
            RatFunc.from_polys(self.x(), self.poly(0))
        with self.assertRaises(ZeroDivisionError):
            RatFunc.lift(self.x(), MODULE_VARIABLES) / 0

    def test_str(self):
        x = self.x()
        self.assertEqual(str(RatFunc.from_polys(self.poly(1), x)), '1/x')

    @given(polys(MODULE_VARIABLES), nonzero_polys(MODULE_VARIABLES))
    @settings(max_examples=50, deadline=None)
    def test_division_inverts_multiplication(self, a, b):
        self.assertRatFuncEqual(RatFunc.lift(a * b, MODULE_VARIABLES) / b, a)


class TestLinearAlgebra(BaseTestCase):

    def test_solve_with_polynomial_matrix(self):
        x, hbar = self.x(), self.hbar()
        matrix = [[x, hbar], [self.poly(0), x + hbar]]
        solution = solve_linear(matrix, [x * x + hbar, x + hbar])
        self.assertEqual(solution.kernel, [])
        self.assertRatFuncEqual(solution.particular[1], 1)
        self.assertRatFuncEqual(solution.particular[0], x)

    def test_kernel(self):
        x = self.x()
        matrix = [[x, 2 * x], [self.poly(1), self.poly(2)]]
        solution = solve_linear(matrix)
        self.assertEqual(len(solution.kernel), 1)
        u, v = solution.kernel[0]
        self.assertRatFuncEqual(u + 2 * v, 0)
        self.assertEqual(matrix_rank(matrix), 1)

    def test_inconsistent(self):
        matrix = [[self.x()], [self.x()]]
        with self.assertRaises(InconsistentSystemError):
            solve_linear(matrix, [self.poly(1), self.poly(2)])

    def test_determinant_and_inverse(self):
        x, hbar = self.x(), self.hbar()
        matrix = [[x, hbar], [self.poly(1), x]]
        self.assertRatFuncEqual(determinant(matrix), x * x - hbar)
        inverse = mat_inverse(matrix)
        self.assertMatrixZero(mat_sub(mat_mul(matrix, inverse), identity(2, MODULE_VARIABLES)))

    @settings(max_examples=50, deadline=None)
    @given(polynomial_systems())
    def test_solution_substitutes_back(self, system):
        matrix, rhs = system
        solution = solve_linear(matrix, rhs, MODULE_VARIABLES)
        for found, expected in zip(mat_apply(matrix, solution.particular), rhs):
            self.assertRatFuncEqual(found, expected)
        for vector in solution.kernel:
            for found in mat_apply(matrix, vector):
                self.assertRatFuncEqual(found, 0)
        self.assertEqual(len(solution.kernel), len(matrix[0]) - matrix_rank(matrix, MODULE_VARIABLES))

    def test_wrong_solution_is_rejected(self):
        F = fraction_field(MODULE_VARIABLES)
        row = [RatFunc.lift(self.x(), MODULE_VARIABLES).element]
        with self.assertRaises(IdentityFailure):
            _substitute_back([row], [F.one], [RatFunc.constant(MODULE_VARIABLES, 1)], [], F)
        with self.assertRaises(IdentityFailure):
            _substitute_back([row], [F.zero], [RatFunc.constant(MODULE_VARIABLES, 0)],
                             [[RatFunc.constant(MODULE_VARIABLES, 1)]], F)

    def test_jordan_type(self):
        one, zero = self.poly(1), self.poly(0)
        nilpotent = [[zero, one, zero], [zero, zero, one], [zero, zero, zero]]
        self.assertEqual(jordan_type(nilpotent), [3])
        nilpotent = [[zero, one, zero], [zero, zero, zero], [zero, zero, zero]]
        self.assertEqual(jordan_type(nilpotent), [2, 1])


class TestHilbert(BaseTestCase):

    def test_free_algebra_counts_monomials(self):
        series = free_graded_hilbert([4, 2, 2], 8)
        self.assertEqual(series.rows(), [(0, 1), (2, 2), (4, 4), (6, 6), (8, 9)])

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.sampled_from([2, 4, 6, 8]), min_size=1, max_size=4))
    def test_free_algebra_brute_force(self, degrees):
        max_degree = 12
        counts = [0] * (max_degree + 1)
        for exponents in itertools.product(range(max_degree // 2 + 1), repeat=len(degrees)):
            total = sum(e * d for e, d in zip(exponents, degrees))
            if total <= max_degree:
                counts[total] += 1
        self.assertEqual(list(free_graded_hilbert(degrees, max_degree).coefficients), counts)

    def test_product(self):
        product = free_graded_hilbert([2], 10) * free_graded_hilbert([4], 10)
        self.assertEqual(product, free_graded_hilbert([2, 4], 10))

    def test_grading(self):
        grading = Grading({'x': 2})
        self.assertEqual(grading.poly_degree(self.x() * self.hbar() + self.x()), 4)
        self.assertEqual(grading.hilbert(4), HilbertSeries([1, 0, 2, 0, 3], 4))

    def test_odd_degree_rejected(self):
        with self.assertRaises(GradingError):
            free_graded_hilbert([3], 6)
        with self.assertRaises(GradingError):
            Grading({'hbar': 4})


if __name__ == '__main__':
    unittest.main()
