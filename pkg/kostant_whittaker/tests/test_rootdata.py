#!/usr/bin/env python
# encoding: utf-8
"""
Created on '16/10/2026'.
"""

import unittest

from hypothesis import given, settings, strategies as st

from kostant_whittaker.rootdata import (
    root_system, invariant_degrees, weight_multiplicity, character, weyl_dimension, molien_series, Weight,
    weyl_orbit
)
from kostant_whittaker.exactalg import free_graded_hilbert
from kostant_whittaker.lib.errors import UnsupportedRootSystemError, WeightError
from kostant_whittaker.tests import BaseTestCase


class TestRootSystem(BaseTestCase):

    def test_weyl_group_orders(self):
        for tag, order in [('A1', 2), ('A2', 6), ('B2', 8), ('G2', 12)]:
            self.assertEqual(len(root_system(tag).weyl_group()), order)

    def test_positive_roots(self):
        for tag, count in [('A1', 1), ('A2', 3), ('B2', 4), ('G2', 6)]:
            self.assertEqual(len(root_system(tag).positive_roots()), count)

    def test_cartan_from_json(self):
        self.assertEqual(root_system('{"cartan": [[2, -1], [-1, 2]]}'), root_system('A2'))

    def test_unsupported(self):
        with self.assertRaises(UnsupportedRootSystemError):
            root_system('E9')
        with self.assertRaises(UnsupportedRootSystemError):
            root_system({'cartan': [[2, 1], [1, 2]]})

    def test_dominant_conjugate(self):
        system = root_system('A2')
        self.assertEqual(system.dominant_conjugate([-1, 2]), Weight([1, 1]))
        self.assertTrue(system.in_root_lattice(Weight([1, 1])))
        self.assertFalse(system.in_root_lattice(Weight([1, 0])))

    def test_weight_rank_checked(self):
        with self.assertRaises(WeightError):
            root_system('A2').weight([1])


class TestInvariants(BaseTestCase):

    def test_molien_a1(self):
        self.assertEqual(molien_series(root_system('A1'), 6), [1, 0, 1, 0, 1, 0, 1])

    def test_molien_matches_free_invariants(self):
        for tag in ('A2', 'B2', 'G2'):
            system = root_system(tag)
            doubled = [2 * d for d in invariant_degrees(system).degrees]
            series = free_graded_hilbert(doubled, 24)
            self.assertEqual(molien_series(system, 12), [series.coefficient(2 * k) for k in range(13)], tag)

    def test_invariant_degrees(self):
        for tag, degrees in [('A1', (2,)), ('A2', (2, 3)), ('B2', (2, 4)), ('G2', (2, 6))]:
            self.assertEqual(invariant_degrees(root_system(tag)).degrees, degrees)


class TestCharacters(BaseTestCase):

    def test_adjoint_a2(self):
        system = root_system('A2')
        weights = character(system, [1, 1])
        self.assertEqual(weights[Weight([0, 0])], 2)
        self.assertEqual(sum(weights.values()), 8)
        self.assertEqual(len(weights), 7)

    def test_multiplicity_outside_support(self):
        self.assertEqual(weight_multiplicity(root_system('A2'), [1, 0], [0, 0]), 0)

    def test_multiplicity_is_weyl_invariant(self):
        for tag, highest in [('A2', [1, 1]), ('A2', [2, 1]), ('B2', [1, 1]), ('G2', [1, 0])]:
            system = root_system(tag)
            for mu in character(system, highest):
                multiplicity = weight_multiplicity(system, highest, mu)
                for nu in weyl_orbit(system, mu):
                    self.assertEqual(weight_multiplicity(system, highest, nu), multiplicity, '%s in %s' % (nu, tag))

    def test_not_dominant(self):
        with self.assertRaises(WeightError):
            weight_multiplicity(root_system('A1'), [-1], [1])

    @given(st.sampled_from(['A1', 'A2', 'B2', 'G2']), st.integers(0, 2), st.integers(0, 2))
    @settings(max_examples=20, deadline=None)
    def test_freudenthal_matches_weyl_dimension(self, tag, a, b):
        system = root_system(tag)
        highest = [a, b][:system.rank]
        self.assertEqual(sum(character(system, highest).values()), weyl_dimension(system, highest))


if __name__ == '__main__':
    unittest.main()
