# -*- coding: utf-8 -*-
"""
orthopack.tests.test_orthopack
Tests for orthopack module
"""

import unittest

import orthopack
from orthopack.exceptions import DimensionMismatch


class Testorthopack(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)

        def builder(dimension, window=5):
            return (dimension, window)
        self.builder = builder

        def any_settings(**kwargs):
            return kwargs
        self.any_settings = any_settings

        class Box(orthopack._orthopackBase):
            def __init__(self, lo, hi=1):
                self.lo = lo
                self.hi = hi
        self.Box = Box
        self.box_dict = {'lo': 0, 'hi': 2, 'class': str(Box)}

    def test_accepted_settings(self):
        self.assertEqual(orthopack._accepted_settings(self.builder),
                         ('dimension', 'window'))
        self.assertIsNone(orthopack._accepted_settings(self.any_settings))
        self.assertEqual(orthopack._accepted_settings(self.Box), ('lo', 'hi'))

    def test_call_with_settings(self):
        self.assertEqual(
            orthopack._call_with_settings(self.builder, dimension=3,
                                          kmax=7),
            (3, 5))
        self.assertEqual(
            orthopack._call_with_settings(self.builder, dimension=3,
                                          window=None),
            (3, 5))
        self.assertEqual(
            orthopack._call_with_settings(self.any_settings, kmax=7,
                                          seed=None),
            {'kmax': 7})
        self.assertEqual(orthopack._call_with_settings(self.Box, lo=0, hi=2,
                                                       seed=4),
                         self.Box(0, 2))

    def test_base_to_dict(self):
        self.assertEqual(self.Box(0, 2).to_dict(), self.box_dict)

    def test_base_from_dict(self):
        self.assertEqual(self.Box.from_dict(self.box_dict), self.Box(0, 2))
        self.assertNotEqual(self.Box(0, 2), self.Box(0, 3))
        self.assertNotEqual(self.Box(0, 2), (0, 2))

    def test_as_list(self):
        self.assertEqual(orthopack._as_list((5, 3)), [5, 3])
        self.assertEqual(orthopack._as_list(4), [4])
        self.assertEqual(orthopack._as_list('ab'), ['ab'])
        self.assertEqual(orthopack._as_list(set()), [])

    def test_check_dimension(self):
        orthopack._check_dimension(3, 3)
        with self.assertRaises(DimensionMismatch):
            orthopack._check_dimension(3, 2)
        with self.assertRaises(ValueError):
            orthopack._check_dimension(2, 4, what='family')


if __name__ == '__main__':
    unittest.main()
