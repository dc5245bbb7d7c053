# -*- coding: utf-8 -*-
"""
orthopack.tests.finite.test_orthopack_finite_intervals
Tests for orthopack.finite.intervals
"""
import unittest
from fractions import Fraction

import numpy as np

from orthopack import finite
from orthopack.exceptions import DomainError
from orthopack.finite.intervals import (IntervalUnion, PeriodicSet,
                                        ComplexEnclosure, closed_form_ft,
                                        direct_sum_ft, ft_interval_union,
                                        closed_form_values,
                                        direct_sum_values, lift_to_R,
                                        few_zeros_sampling,
                                        lifted_maximality)


class TestSets(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.H = IntervalUnion([5, 0, 1, 2], period=10)
        self.union_dict = {
            'class': "<class 'orthopack.finite.intervals.IntervalUnion'>",
            'starts': [0, 1, 2, 5],
            'period': 10,
            'intervals': [[0, 1], [1, 2], [2, 3], [5, 6]],
        }

    def test_interval_union(self):
        self.assertEqual(self.H.measure, 4)
        self.assertEqual(self.H.merged(), [(0, 3), (5, 6)])
        self.assertTrue(self.H.contains('5/2'))
        self.assertFalse(self.H.contains(3))
        self.assertEqual(self.H.mask().support, [0, 1, 2, 5])
        with self.assertRaises(ValueError):
            IntervalUnion([3, 10], period=10)
        with self.assertRaises(ValueError):
            IntervalUnion([3]).mask()

    def test_periodic_set(self):
        S = PeriodicSet([1, 7], 4)
        self.assertEqual(S.residues, [1, 3])
        self.assertEqual(S.points(0, 1), [Fraction(1, 4), Fraction(3, 4)])
        self.assertEqual(S.points(-1, 0), [Fraction(-3, 4), Fraction(-1, 4)])
        self.assertTrue(S.contains('5/4'))
        self.assertFalse(S.contains('1/2'))
        self.assertFalse(S.contains('1/8'))

    def test_lift(self):
        H, Lambda, Gamma = lift_to_R(3, 5, 7)
        self.assertEqual(len(H), 105)
        self.assertEqual(H.period, 11025)
        self.assertEqual(len(Lambda), 45)
        self.assertEqual(len(Gamma), 105)
        self.assertTrue(Lambda.contains(0))
        self.assertTrue(Lambda.contains(-3))

    def test_to_dict(self):
        self.assertEqual(self.H.to_dict(), self.union_dict)

    def test_from_dict(self):
        self.assertEqual(IntervalUnion.from_dict(self.union_dict), self.H)


class TestEnclosures(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.H, _, _ = lift_to_R(3, 5, 7)

    def test_exact_points(self):
        self.assertEqual(ft_interval_union(self.H, 0),
                         ComplexEnclosure.point(105))
        self.assertTrue(ft_interval_union(self.H, 1).is_exact_zero)
        k = finite.phi(3, 5, 7, 3, 0, 0)
        value = ft_interval_union(self.H, Fraction(k, 11025))
        self.assertTrue(value.is_exact_zero)

    def test_nonzero(self):
        value = ft_interval_union(self.H, '1/2')
        self.assertFalse(value.contains_zero())
        self.assertTrue(value.width < 1e-15)
        expected = direct_sum_values(3, 5, 7, [11025/2])[0]*(-2j/np.pi)
        self.assertAlmostEqual(value.midpoint, expected, places=9)

    def test_closed_form(self):
        for xi in ('1/2', '3/10', Fraction(12345, 7)):
            closed = closed_form_ft(3, 5, 7, xi)
            direct = direct_sum_ft(3, 5, 7, xi)
            quotient = closed_form_ft(3, 5, 7, xi, form='quotient')
            self.assertTrue(abs(closed.midpoint - direct.midpoint) < 1e-9)
            self.assertTrue(abs(closed.midpoint - quotient.midpoint) < 1e-9)
            self.assertTrue(closed.width < 1e-12)
            self.assertFalse(closed.contains_zero())

    def test_frequency_interval(self):
        wide = closed_form_ft(3, 5, 7, ('1/3', '1/2'))
        point = closed_form_ft(3, 5, 7, '2/5')
        self.assertTrue(wide.re[0] <= point.re[0] <= point.re[1]
                        <= wide.re[1])
        self.assertTrue(wide.im[0] <= point.im[0] <= point.im[1]
                        <= wide.im[1])

    def test_errors(self):
        with self.assertRaises(DomainError):
            closed_form_ft(3, 5, 7, 2)
        with self.assertRaises(DomainError):
            closed_form_ft(3, 5, 7, ('1/2', '3/2'))
        with self.assertRaises(ValueError):
            closed_form_ft(3, 5, 7, '1/2', form='product')
        with self.assertRaises(ValueError):
            ft_interval_union(self.H, ('1/2', '1/3'))

    def test_enclosure_dict(self):
        value = ComplexEnclosure(re=('1/3', '1/2'), im=(0, 0))
        self.assertEqual(ComplexEnclosure.from_dict(value.to_dict()), value)
        self.assertTrue(ComplexEnclosure.point(0).is_exact_zero)
        self.assertFalse(value.contains_zero())


class TestSampling(unittest.TestCase):
    def test_float_values(self):
        xi = np.array([0., 0.5, 1234.25, 3*11025 + 0.1, -7.3])
        closed = closed_form_values(3, 5, 7, xi)
        direct = direct_sum_values(3, 5, 7, xi)
        self.assertEqual(closed.shape, (5,))
        self.assertTrue(np.allclose(closed, direct, rtol=0, atol=1e-9))
        self.assertTrue(np.isclose(closed[0], 105))

    def test_few_zeros(self):
        certificate = few_zeros_sampling(3, 5, 7, samples=1000, seed=0)
        self.assertTrue(certificate.passed)
        self.assertTrue(certificate.evidence_only)
        self.assertTrue(certificate.details['max_difference'] < 1e-9)
        self.assertTrue(certificate.details['min_abs'] > 0)

    def test_lifted_maximality(self):
        N = 11025
        certificate = lifted_maximality(3, 5, 7, samples=200, seed=0)
        self.assertTrue(certificate.passed)
        details = certificate.details
        self.assertTrue(details['exhaustive'].passed)
        self.assertEqual(details['rational']['excluded'], 4*N)
        self.assertEqual(details['rational']['checked'], 9*N)
        self.assertTrue(details['irrational'].passed)
        self.assertEqual(details['size'], 45)
        self.assertEqual(details['measure'], 105)
        with self.assertRaises(ValueError):
            lifted_maximality(3, 5, 7, denominators=(2*N,), samples=0)


if __name__ == '__main__':
    unittest.main()
