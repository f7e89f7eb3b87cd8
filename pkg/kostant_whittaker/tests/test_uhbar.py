#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import unittest

from hypothesis import given, settings

from kostant_whittaker.exactalg import MultiPoly
from kostant_whittaker.uhbar import (
    PBWElem, VermaVec, RepVec, TensorVec, pbw_mul, casimir, commutator, verma_act, rep_act, tensor_act,
    PBW_VARIABLES
)
from kostant_whittaker.lib.errors import KostantError, WeightError
from kostant_whittaker.tests import BaseTestCase
from kostant_whittaker.tests.strategies import pbw_elements, tensor_vectors, rep_vectors, verma_vectors

E, H, F = (PBWElem.generator(name) for name in 'ehf')


def hbar_power(k, scalar=1):
    return MultiPoly.gen(PBW_VARIABLES, 'hbar') ** k * scalar


class TestPBW(BaseTestCase):

    def test_defining_relations(self):
        self.assertEqual(pbw_mul(E, F), PBWElem({(1, 0, 1): 1, (0, 1, 0): hbar_power(1)}))
        self.assertEqual(pbw_mul(H, E), PBWElem({(0, 1, 1): 1, (0, 0, 1): hbar_power(1, 2)}))
        self.assertEqual(commutator(H, F), PBWElem({(1, 0, 0): hbar_power(1, -2)}))

    def test_ef_squared(self):
        ef = pbw_mul(E, F)
        expected = PBWElem({
            (2, 0, 2): 1,
            (1, 1, 1): hbar_power(1, 3),
            (0, 2, 0): hbar_power(2),
            (1, 0, 1): hbar_power(2, -4),
        })
        self.assertEqual(pbw_mul(ef, ef), expected)

    def test_ef_squared_on_v3(self):
        ef = pbw_mul(E, F)
        for i in range(-3, 4, 2):
            v = RepVec.basis(3, i)
            self.assertEqual(rep_act(pbw_mul(ef, ef), v), rep_act(ef, rep_act(ef, v)))

    def test_casimir_is_central(self):
        for g in (E, H, F):
            self.assertTrue(commutator(casimir(), g).is_zero)

    def test_unknown_generator(self):
        with self.assertRaises(KostantError):
            PBWElem.generator('k')

    @given(pbw_elements(), pbw_elements(), pbw_elements())
    @settings(max_examples=40, deadline=None)
    def test_associativity(self, a, b, c):
        self.assertEqual(pbw_mul(pbw_mul(a, b), c), pbw_mul(a, pbw_mul(b, c)))


class TestModules(BaseTestCase):

    def test_verma_generators(self):
        x, hbar = self.x(), self.hbar()
        m3 = VermaVec.basis(-3)
        self.assertEqual(verma_act(H, m3), VermaVec({-3: x - 3 * hbar}))
        self.assertEqual(verma_act(F, m3), VermaVec.basis(-5))
        self.assertEqual(verma_act(E, m3), VermaVec({-1: hbar * (x - hbar)}))
        self.assertTrue(verma_act(E, VermaVec.basis(-1)).is_zero)

    def test_verma_bracket(self):
        # [e, f] = hbar h on every basis vector
        for j in (-1, -3, -5, -7):
            m = VermaVec.basis(j)
            self.assertEqual(verma_act(commutator(E, F), m), verma_act(pbw_mul(PBWElem.monomial(coef=hbar_power(1)), H), m))

    def test_rep_bounds(self):
        self.assertTrue(rep_act(E, RepVec.basis(2, 2)).is_zero)
        self.assertTrue(rep_act(F, RepVec.basis(2, -2)).is_zero)
        with self.assertRaises(WeightError):
            RepVec.basis(2, 1)

    def test_rep_casimir_scalar(self):
        # C acts on V_n by hbar^2 n (n + 2) / 2
        for n in range(4):
            for i in range(-n, n + 1, 2):
                v = RepVec.basis(n, i)
                self.assertEqual(rep_act(casimir(), v), v.scale(hbar_power(2, n * (n + 2)) * MultiPoly.constant(PBW_VARIABLES, '1/2')))

    def test_tensor_weight(self):
        t = TensorVec.basis(2, -3, 2)
        self.assertEqual(tensor_act(H, t), t.scale(self.x() - self.hbar()))

    def test_invalid_tensor_key(self):
        with self.assertRaises(WeightError):
            TensorVec.basis(1, -2, 1)

    def test_unknown_generator_name(self):
        for vector in (VermaVec.basis(-3), VermaVec(), RepVec.basis(2, 0), TensorVec.basis(1, -1, 1)):
            with self.assertRaises(KostantError):
                vector.generator('g')
        self.assertEqual(VermaVec.basis(-3).generator('e'), VermaVec({-1: self.hbar() * (self.x() - self.hbar())}))

    @given(pbw_elements(1), pbw_elements(1), verma_vectors())
    @settings(max_examples=30, deadline=None)
    def test_verma_action_is_compatible(self, u, v, m):
        self.assertEqual(m.act(pbw_mul(u, v)), m.act(v).act(u))

    @given(pbw_elements(1), pbw_elements(1), rep_vectors())
    @settings(max_examples=30, deadline=None)
    def test_rep_action_is_compatible(self, u, v, w):
        self.assertEqual(w.act(pbw_mul(u, v)), w.act(v).act(u))

    @given(pbw_elements(1), pbw_elements(1), tensor_vectors(max_n=2, depth=2))
    @settings(max_examples=30, deadline=None)
    def test_tensor_action_is_compatible(self, u, v, t):
        self.assertEqual(t.act(pbw_mul(u, v)), t.act(v).act(u))


if __name__ == '__main__':
    unittest.main()
