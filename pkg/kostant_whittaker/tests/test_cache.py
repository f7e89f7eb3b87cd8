#!/usr/bin/env python
# encoding: utf-8
"""
Created on '17/10/2026'.
"""

import os
import json
import tempfile
import unittest

import luigi

from kostant_whittaker.lib.payloads import compute
from kostant_whittaker.lib.serialize import dumps
from kostant_whittaker.lib.errors import KostantError
from kostant_whittaker.tasks.cache import ComputationTask, cache_key, canonical_flags, cached_compute, clear_cache
from kostant_whittaker.tasks.selftest import (
    SelftestCheckTask, SelftestTask, suite_settings, check_confluence, check_associativity, check_actions,
    check_toda, check_hilbert
)
from kostant_whittaker.tests import BaseTestCase


class TestCache(BaseTestCase):

    def test_key_ignores_flag_order(self):
        self.assertEqual(cache_key('graph', {'type': 'A2', 'hw': [1, 0]}), cache_key('graph', {'hw': [1, 0], 'type': 'A2'}))
        self.assertNotEqual(cache_key('phi', {'n': 1}), cache_key('phi', {'n': 2}))

    def test_hit_equals_miss(self):
        cache_dir = tempfile.mkdtemp(dir=self.cache_dir)
        flags = {'n': 2}
        task = ComputationTask(command='phi', flags=canonical_flags(flags), cache_dir=cache_dir)
        self.assertFalse(task.complete())
        stored = cached_compute('phi', flags, cache_dir=cache_dir)
        self.assertTrue(task.complete())
        self.assertEqual(cached_compute('phi', flags, cache_dir=cache_dir), stored)
        self.assertEqual(cached_compute('phi', flags, use_cache=False), stored)
        self.assertEqual(stored, dumps(compute('phi', flags)))

    def test_errors_are_not_cached(self):
        cache_dir = tempfile.mkdtemp(dir=self.cache_dir)
        with self.assertRaises(KostantError):
            cached_compute('phi', {'n': -1}, cache_dir=cache_dir)
        self.assertEqual(os.listdir(cache_dir), [])

    def test_clear_cache(self):
        cache_dir = tempfile.mkdtemp(dir=self.cache_dir)
        cached_compute('hilbert', {'type': 'A1', 'max': 4}, cache_dir=cache_dir)
        self.assertEqual(clear_cache(cache_dir), 1)
        self.assertEqual(clear_cache(cache_dir), 0)

    def test_unknown_computation(self):
        with self.assertRaises(KostantError):
            compute('nothing', {})


class TestSelftest(BaseTestCase):

    settings = {'max_n': 2, 'hilbert_max_degree': 12, 'random_cases': 20, 'seed': 1}

    def test_random_suites(self):
        for check in (check_confluence, check_associativity, check_actions):
            passed, detail = check(0, 0, self.settings)
            self.assertTrue(passed, detail)

    def test_toda_check(self):
        passed, detail = check_toda(0, 0, self.settings)
        self.assertTrue(passed, detail)

    def test_hilbert_check(self):
        passed, detail = check_hilbert(0, 0, self.settings)
        self.assertTrue(passed, detail)

    def test_check_task(self):
        output_dir = tempfile.mkdtemp(dir=self.cache_dir)
        task = SelftestCheckTask(check='idiot', n=2, settings=self.settings, output_dir=output_dir)
        luigi.build([task], local_scheduler=True)
        with task.output().open('r') as f:
            result = json.load(f)
        self.assertTrue(result['passed'], result['detail'])

    def test_quick_suite_layout(self):
        task = SelftestTask(quick=True, output_dir=self.cache_dir)
        max_n = suite_settings(quick=True)['max_n']
        checks = [required.check for required in task.requires()]
        self.assertEqual(checks.count('idiot'), max_n + 1)
        self.assertEqual(checks.count('convolve'), (max_n + 1) * (max_n + 2) // 2)
        self.assertIn('determinism', checks)


if __name__ == '__main__':
    unittest.main()
