# -*- coding: utf-8 -*-
"""
orthopack.tests.test_constants
Tests for orthopack.constants file
"""
import unittest

from orthopack import constants as c


class TestConstants(unittest.TestCase):

    def test_default(self):
        self.assertEqual(c.default('window'), 5)
        self.assertEqual(c.default('inner_window'), 3)
        self.assertEqual(c.default('primes'), (3, 5, 7))
        self.assertEqual(c.default('seed'), 0)
        with self.assertRaises(KeyError):
            c.default('arbitrary setting')

    def test_default_witness(self):
        self.assertEqual(c.default_witness('alpha'), 'sqrt2/2')
        self.assertEqual(c.default_witness('gamma'), 'sqrt5/5')
        with self.assertRaises(KeyError):
            c.default_witness('omega')

    def test_parse_preset(self):
        self.assertEqual(c.parse_preset('sqrt2/2'), (2, 2))
        self.assertEqual(c.parse_preset(' sqrt7 '), (7, 1))
        with self.assertRaises(ValueError):
            c.parse_preset('sqrt4/2')
        with self.assertRaises(ValueError):
            c.parse_preset('sqrt2/0')
        with self.assertRaises(ValueError):
            c.parse_preset('pi/4')

    def test_exit_codes(self):
        self.assertEqual(c.exit_codes['pass'], 0)
        self.assertEqual(c.exit_codes['fail'], 1)
        self.assertEqual(c.exit_codes['undecidable'], 2)
        self.assertEqual(c.exit_codes['usage'], 64)
        self.assertEqual(c.exit_codes['io'], 74)


if __name__ == '__main__':
    unittest.main()
