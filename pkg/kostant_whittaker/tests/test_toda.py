#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import unittest

from kostant_whittaker.exactalg import MultiPoly
from kostant_whittaker.uhbar import PBWElem, casimir
from kostant_whittaker.toda import (
    DiffOp, TodaOp, commutator, invariant_fields, realize, kk_reduce, reduced_casimir, reduce_central_power,
    classical_symbol, classical_toda_hamiltonian
)
from kostant_whittaker.toda.diffop import DIFFOP_VARIABLES
from kostant_whittaker.lib.config import Config, config_repo_path
from kostant_whittaker.lib.errors import KostantError, ResidualDependenceError
from kostant_whittaker.lib.serialize import dumps
from kostant_whittaker.tests import BaseTestCase

HBAR = DiffOp.hbar()


def hbar_poly(k, scalar=1):
    return MultiPoly.gen(DIFFOP_VARIABLES, 'hbar') ** k * MultiPoly.constant(DIFFOP_VARIABLES, scalar)


class TestDiffOp(BaseTestCase):

    def test_canonical_commutator(self):
        for name in ('u', 'v', 't'):
            self.assertEqual(commutator(DiffOp.derivative(name), DiffOp.coordinate(name)), HBAR)

    def test_inverse_power_of_t(self):
        # [d_t, t^-2] = -2 hbar t^-3
        found = commutator(DiffOp.derivative('t'), DiffOp.coordinate('t', -2))
        self.assertEqual(found, -2 * HBAR * DiffOp.coordinate('t', -3))

    def test_only_t_is_invertible(self):
        with self.assertRaises(KostantError):
            DiffOp.coordinate('u', -1)

    def test_toda_op_rejects_unipotent(self):
        with self.assertRaises(KostantError):
            TodaOp.from_diffop(DiffOp.coordinate('u'))


class TestInvariantFields(BaseTestCase):

    def test_left_fields_are_a_homomorphism(self):
        fields = invariant_fields()
        self.assertEqual(commutator(fields[('e', 'left')], fields[('f', 'left')]), HBAR * fields[('h', 'left')])
        self.assertEqual(commutator(fields[('h', 'left')], fields[('e', 'left')]), 2 * HBAR * fields[('e', 'left')])
        self.assertEqual(commutator(fields[('h', 'left')], fields[('f', 'left')]), -2 * HBAR * fields[('f', 'left')])

    def test_right_fields_are_an_antihomomorphism(self):
        fields = invariant_fields()
        self.assertEqual(commutator(fields[('e', 'right')], fields[('f', 'right')]), -HBAR * fields[('h', 'right')])
        self.assertEqual(commutator(fields[('h', 'right')], fields[('e', 'right')]), -2 * HBAR * fields[('e', 'right')])

    def test_left_and_right_commute(self):
        fields = invariant_fields()
        for a in 'ehf':
            for b in 'ehf':
                self.assertTrue(commutator(fields[(a, 'left')], fields[(b, 'right')]).is_zero)

    def test_unknown_side(self):
        with self.assertRaises(KostantError):
            realize(casimir(), 'middle')


class TestReduction(BaseTestCase):

    def test_reduced_casimir(self):
        op = reduced_casimir()
        self.assertEqual(op.coefficient(2, 2), MultiPoly.constant(DIFFOP_VARIABLES, '1/2'))
        self.assertEqual(op.coefficient(1, 1), hbar_poly(1, '3/2'))
        self.assertEqual(op.coefficient(-2, 0), 2)
        self.assertEqual(len(op.terms), 3)
        self.assertFalse(op.involves_unipotent())

    def test_sides_agree(self):
        self.assertEqual(reduced_casimir('left'), reduced_casimir('right'))

    def test_regression_vector(self):
        path = config_repo_path(Config.get('toda', 'regression_vector'))
        with open(path, 'r') as f:
            self.assertEqual(dumps(reduced_casimir().to_json()), f.read())

    def test_json(self):
        op = reduced_casimir()
        self.assertEqual(TodaOp.from_json(op.to_json()), op)

    def test_classical_limit(self):
        self.assertEqual(classical_symbol(reduced_casimir()), classical_toda_hamiltonian())

    def test_central_powers(self):
        for k in range(3):
            reduced, expected = reduce_central_power(k)
            self.assertEqual(reduced, expected)

    def test_non_central_elements_do_not_reduce(self):
        with self.assertRaises(ResidualDependenceError):
            kk_reduce(realize(PBWElem.generator('h'), 'left'))
        with self.assertRaises(ResidualDependenceError):
            kk_reduce(realize(PBWElem.generator('h'), 'left') + realize(PBWElem.generator('h'), 'right'))


if __name__ == '__main__':
    unittest.main()
