# -*- coding: utf-8 -*-
"""
orthopack.tests.exactreal.test_orthopack_exactreal
Tests for orthopack.exactreal
"""
import math
import unittest
import warnings
from fractions import Fraction

import numpy as np

from orthopack.exactreal import (SymbolicReal, SymbolWitness, compare,
                                 compare_abs_lt_one, is_integer,
                                 is_nonzero_integer, is_zero, symbols_of)
from orthopack.exceptions import Undecidable


class TestSymbolicReal(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.alpha = SymbolicReal.symbol('alpha')
        self.beta = SymbolicReal.symbol('beta')
        self.x_dict = {
            'class': "<class 'orthopack.exactreal.SymbolicReal'>",
            'rat': '-3/4',
            'syms': {'alpha': 2, 'beta': -1},
        }

    def test_is_integer(self):
        self.assertTrue(is_integer(3))
        self.assertTrue(is_integer(SymbolicReal('6/2')))
        self.assertFalse(is_integer(Fraction(1, 2)))
        self.assertFalse(is_integer(self.alpha))
        # alpha - alpha + 2 cancels to an integer
        self.assertTrue(is_integer(self.alpha - self.alpha + 2))
        self.assertFalse(is_integer(self.alpha - self.beta))

    def test_is_nonzero_integer(self):
        self.assertTrue(is_nonzero_integer(-5))
        self.assertFalse(is_nonzero_integer(0))
        self.assertFalse(is_nonzero_integer(self.alpha - 1))
        self.assertTrue(is_zero(self.alpha - self.alpha))

    def test_arithmetic(self):
        x = 2*self.alpha - self.beta + Fraction(1, 4)
        self.assertEqual(x.coefficient('alpha'), 2)
        self.assertEqual(x.coefficient('beta'), -1)
        self.assertEqual(x.coefficient('gamma'), 0)
        self.assertEqual(x.rat, Fraction(1, 4))
        self.assertEqual(x - x, 0)
        self.assertEqual(-x + x, SymbolicReal())
        self.assertEqual(1 - self.alpha, -(self.alpha - 1))
        self.assertEqual(str(self.alpha - 1), '-1+alpha')

    def test_mul(self):
        self.assertEqual((self.alpha + 1)*3, 3*self.alpha + 3)
        self.assertEqual(SymbolicReal('1/2')*Fraction(2, 3), Fraction(1, 3))
        with self.assertRaises(TypeError):
            self.alpha*self.beta
        with self.assertRaises(ValueError):
            self.alpha*Fraction(1, 2)

    def test_hash(self):
        self.assertEqual(hash(SymbolicReal(3)), hash(3))
        values = {self.alpha + 1, 1 + self.alpha, SymbolicReal(2)}
        self.assertEqual(len(values), 2)

    def test_same_class(self):
        self.assertTrue((self.alpha + 3).same_class(self.alpha - 2))
        self.assertFalse((self.alpha + Fraction(1, 2)).same_class(self.alpha))
        rep, offset = (self.alpha - Fraction(5, 2)).split()
        self.assertEqual(rep, self.alpha + Fraction(1, 2))
        self.assertEqual(offset, -3)
        self.assertEqual((self.alpha + 7).class_key(),
                         self.alpha.class_key())

    def test_symbols_of(self):
        self.assertEqual(symbols_of([self.beta, self.alpha + 1, 3]),
                         ('alpha', 'beta'))

    def test_to_dict(self):
        x = 2*self.alpha - self.beta - Fraction(3, 4)
        self.assertEqual(x.to_dict(), self.x_dict)

    def test_from_dict(self):
        self.assertEqual(SymbolicReal.from_dict(self.x_dict),
                         2*self.alpha - self.beta - Fraction(3, 4))


class TestSymbolWitness(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.witness = SymbolWitness.default()
        self.alpha = SymbolicReal.symbol('alpha')
        self.beta = SymbolicReal.symbol('beta')

    def test_symbol_enclosure(self):
        lo, hi = self.witness.symbol_enclosure('alpha')
        self.assertTrue(lo < hi)
        self.assertTrue(2*lo*lo < 1 < 2*hi*hi)

    def test_floor(self):
        self.assertEqual(self.witness.floor(self.alpha), 0)
        self.assertEqual(self.witness.floor(self.alpha - 3), -3)
        self.assertEqual(self.witness.floor(SymbolicReal('-1/2')), -1)

    def test_compare(self):
        # alpha = 0.7071..., beta = 0.5773...
        self.assertEqual(compare(self.alpha, self.beta, self.witness), 1)
        self.assertEqual(compare(self.beta, self.alpha, self.witness), -1)
        self.assertEqual(compare(self.alpha + 1, self.alpha + 1,
                                 self.witness), 0)
        self.assertTrue(compare_abs_lt_one(self.alpha - self.beta,
                                           self.witness))
        self.assertFalse(compare_abs_lt_one(self.alpha + 1, self.witness))

    def test_undecidable(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', UserWarning)
            witness = SymbolWitness({'alpha': 'sqrt2/2', 'beta': 'sqrt8/4'},
                                    depth=4)
        # Both presets evaluate to sqrt(2)/2
        with self.assertRaises(Undecidable):
            compare(self.alpha, self.beta, witness)

    def test_refinement_depth(self):
        # 45-bit lower approximation of alpha
        near = Fraction(math.isqrt(2*4**45), 2*2**45)
        with self.assertRaises(Undecidable):
            compare(self.alpha, near, SymbolWitness(depth=0))
        self.assertEqual(compare(self.alpha, near, self.witness), 1)
        self.assertEqual(compare(near, self.alpha, self.witness), -1)

    def test_is_integer_random(self):
        rng = np.random.default_rng(0)
        names = ('alpha', 'beta', 'gamma')
        n_integer = 0
        for _ in range(10**4):
            if rng.random() < 0.25:
                syms = {}
            else:
                syms = {name: int(rng.integers(-4, 5)) for name in names}
            rat = Fraction(int(rng.integers(-256, 257)),
                           int(rng.integers(1, 65)))
            x = SymbolicReal(rat, syms)
            lo, hi = self.witness.enclose(x, bits=60)
            near_integer = (hi - lo < Fraction(1, 10**6)
                            and math.floor(hi) >= math.ceil(lo))
            self.assertEqual(is_integer(x), near_integer, msg=str(x))
            n_integer += near_integer
        self.assertTrue(0 < n_integer < 10**4)

    def test_dependent_presets_warn(self):
        with self.assertWarns(UserWarning):
            SymbolWitness({'alpha': 'sqrt2/2', 'beta': 'sqrt8/3'})

    def test_from_assignments(self):
        witness = SymbolWitness.from_assignments(['alpha=sqrt3/3'])
        self.assertEqual(witness.presets['alpha'], 'sqrt3/3')
        with self.assertRaises(ValueError):
            SymbolWitness.from_assignments(['alpha'])
        with self.assertRaises(ValueError):
            SymbolWitness.from_assignments(['alpha=sqrt4/2'])

    def test_to_dict(self):
        witness = SymbolWitness({'alpha': 'sqrt2/2'})
        self.assertEqual(SymbolWitness.from_dict(witness.to_dict()), witness)


if __name__ == '__main__':
    unittest.main()
