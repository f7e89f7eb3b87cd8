#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import random
import unittest
from unittest import mock

from hypothesis import given, settings, strategies as st

from kostant_whittaker.exactalg import RatFunc
from kostant_whittaker.exactalg.linalg import mat_apply, mat_inverse, mat_mul
from kostant_whittaker.uhbar import TensorVec, MODULE_VARIABLES
from kostant_whittaker.kostant import (
    basis_labels, coinvariant_reduce, phi_module, quasiclassical_jordan, cyclic_generator_check,
    highest_weight_split, idiot_expansion, idiot_report, raised_idiot_expansion, filtration_check,
    clebsch_convolution, convolution_passes, exactness_check, casimir_eigenvalue, annihilator_polynomial
)
from kostant_whittaker.kostant.convolution import convolved_casimir, unit_check
from kostant_whittaker.kostant.split import split_change_of_basis
from kostant_whittaker.lib.errors import KostantError
from kostant_whittaker.tests import BaseTestCase
from kostant_whittaker.tests.strategies import tensor_vectors


class TestCoinvariants(BaseTestCase):

    def test_basis_labels(self):
        self.assertEqual(basis_labels(0), [0])
        self.assertEqual(basis_labels(3), [-3, -1, 1, 3])

    def test_single_step(self):
        # m_{-3} (x) v_1 = m_{-1} (x) v_1 - hbar m_{-1} (x) v_{-1}
        reduced = coinvariant_reduce(TensorVec.basis(1, -3, 1))
        self.assertEqual(reduced, [-self.hbar(), self.poly(1)])

    def test_bottom_vector(self):
        # f v_{-n} = 0, so m_{-5} (x) v_{-2} is already m_{-1} (x) v_{-2}
        self.assertEqual(coinvariant_reduce(TensorVec.basis(2, -5, -2)), [self.poly(1), self.poly(0), self.poly(0)])

    @given(tensor_vectors(), st.integers(0, 2 ** 32))
    @settings(max_examples=50, deadline=None)
    def test_reduction_order_is_irrelevant(self, t, seed):
        self.assertEqual(coinvariant_reduce(t), coinvariant_reduce(t, random.Random(seed)))


class TestPhi(BaseTestCase):

    def test_phi_v0(self):
        module = phi_module(0)
        self.assertEqual(module.rank, 1)
        x, hbar = self.x(), self.hbar()
        self.assertRatFuncEqual(module.casimir_matrix[0][0], RatFunc.lift(x * x - hbar * hbar, x.variables) / 2)

    def test_casimir_eigenvalue(self):
        x, hbar = self.x(), self.hbar()
        self.assertRatFuncEqual(casimir_eigenvalue(1) * 2, x * x + 2 * x * hbar)

    def test_annihilator_degree(self):
        self.assertEqual(len(annihilator_polynomial(3)), 5)

    def test_annihilator_vanishes(self):
        for n in range(4):
            self.assertTrue(phi_module(n).annihilator_vanishes(), 'n = %d' % n)

    def test_quasiclassical_jordan(self):
        for n in range(4):
            self.assertEqual(quasiclassical_jordan(n), [n + 1])

    def test_cyclic_generator(self):
        for n in range(3):
            value = cyclic_generator_check(n)
            self.assertTrue(value.is_polynomial and value.to_poly().is_constant)

    def test_negative_n(self):
        with self.assertRaises(KostantError):
            phi_module(-1)


class TestSplit(BaseTestCase):

    def test_idiot_coefficients_n1(self):
        x = self.x()
        self.assertCoefficients(idiot_expansion(1), {-1: self.poly(1), 1: RatFunc.from_polys(self.poly(1), x)})

    def test_idiot_coefficients_n2(self):
        x, hbar = self.x(), self.hbar()
        one = self.poly(1)
        self.assertCoefficients(idiot_expansion(2), {
            -2: one,
            0: RatFunc.from_polys(one, x - hbar),
            2: RatFunc.from_polys(one, x * (x + hbar)),
        })

    def test_idiot_upstairs(self):
        for n in range(4):
            report = idiot_report(n)
            self.assertTrue(report.holds and report.upstairs_holds, 'n = %d' % n)

    def test_filtration_vector_n1(self):
        x, hbar = self.x(), self.hbar()
        split = highest_weight_split(1)
        s = split.vectors[-1]
        self.assertRatFuncEqual(s.coefficient((-1, -1)), RatFunc.from_polys(x - hbar, x))
        self.assertRatFuncEqual(s.coefficient((-3, 1)), RatFunc.from_polys(-self.poly(1), x))
        self.assertRatFuncEqual(split.projections[-1][1], RatFunc.from_polys(-self.poly(1), x))
        self.assertTrue(split.is_upper_unitriangular())

    def test_unit_normalization(self):
        split = highest_weight_split(2, 'unit')
        for i in basis_labels(2):
            self.assertRatFuncEqual(split.vectors[i].coefficient((-1, i)), 1)

    def test_split_vectors_are_casimir_eigenvectors(self):
        # C acts on the class of s_i by 1/2 ((x + i hbar)^2 - hbar^2)
        for n in range(4):
            split = highest_weight_split(n)
            casimir_matrix = phi_module(n).casimir_matrix
            for i in basis_labels(n):
                image = coinvariant_reduce(split.vectors[i])
                found = mat_apply(casimir_matrix, image)
                for value, coordinate in zip(found, image):
                    self.assertRatFuncEqual(value, casimir_eigenvalue(i) * coordinate)

    def test_top_split_vector(self):
        for n in range(4):
            for normalization in ('filtration', 'unit'):
                top = highest_weight_split(n, normalization).vectors[n]
                self.assertEqual(list(top.coefficients), [(-1, n)])
                self.assertRatFuncEqual(top.coefficient((-1, n)), 1)

    def test_unknown_normalization(self):
        with self.assertRaises(KostantError):
            highest_weight_split(1, 'other')

    def test_raised_expansion(self):
        for n, l in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            report = raised_idiot_expansion(n, l)
            self.assertTrue(report.holds, 'n = %d, l = %d' % (n, l))
            self.assertFalse(report.holds_with_hbar_power)
            self.assertTrue(report.upstairs_holds)

    def test_raised_expansion_without_raising(self):
        report = raised_idiot_expansion(2, 0)
        self.assertCoefficients(report.coefficients, idiot_expansion(2))

    def test_filtration_check(self):
        for n in range(3):
            self.assertTrue(filtration_check(n))


class TestConvolution(BaseTestCase):

    def test_v1_v1(self):
        report = clebsch_convolution(1, 1)
        self.assertEqual(report.rank, 4)
        self.assertTrue(convolution_passes(report))
        self.assertEqual(report.multiplicities[0], (2, 2))

    def test_unit(self):
        for m in range(3):
            self.assertTrue(clebsch_convolution(m, 0).unit_matches)
            self.assertTrue(clebsch_convolution(0, m).unit_matches)

    def test_right_x_matches_casimir(self):
        for m in range(4):
            self.assertTrue(unit_check(m), 'm = %d' % m)

    def test_convolved_operator_uses_right_x(self):
        # (S^-1 (x) 1) M (S (x) 1) has the block structure casimir_matrix(n) at x -> x + i hbar
        matrix, inverse = split_change_of_basis(1)
        operator = convolved_casimir(1, 1)
        casimir_matrix = phi_module(1).casimir_matrix
        for j in range(2):
            for k in range(2):
                block = [[operator[2 * j + r][2 * k + c] for c in range(2)] for r in range(2)]
                conjugated = mat_mul(mat_mul(inverse, block), matrix)
                for b, i in enumerate(basis_labels(1)):
                    shifted = casimir_matrix[j][k].subs('x', self.x() + self.hbar() * i)
                    self.assertRatFuncEqual(conjugated[b][b], shifted)
                    self.assertRatFuncEqual(conjugated[b][1 - b], 0)

    def test_perturbed_split_fails(self):
        def reversed_columns(n):
            matrix, _ = split_change_of_basis(n)
            matrix = [list(reversed(row)) for row in matrix]
            return matrix, mat_inverse(matrix, MODULE_VARIABLES)

        with mock.patch('kostant_whittaker.kostant.convolution.split_change_of_basis', reversed_columns):
            report = clebsch_convolution(2, 1)
        self.assertFalse(report.right_x_matches)
        self.assertFalse(convolution_passes(report))

    def test_passes_small(self):
        for m in range(3):
            for n in range(3 - m):
                self.assertTrue(convolution_passes(clebsch_convolution(m, n)), 'm = %d, n = %d' % (m, n))

    def test_exactness(self):
        report = exactness_check()
        self.assertEqual(report.component_ranks, {0: 1, 2: 3})
        self.assertEqual(report.total_rank, 4)
        self.assertTrue(report.holds)


if __name__ == '__main__':
    unittest.main()
