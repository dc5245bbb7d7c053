# -*- coding: utf-8 -*-
"""
orthopack.tests.finite.test_orthopack_finite
Tests for orthopack.finite
"""
import unittest

import numpy as np

from orthopack import finite
from orthopack.exceptions import BoundExceeded


class TestFiniteGroup(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.G = finite.FiniteGroup.cube_group(3, 5, 7)
        self.group_dict = {
            'class': "<class 'orthopack.finite.FiniteGroup'>",
            'moduli': [9, 25, 49],
        }

    def test_group(self):
        self.assertEqual(self.G.order, 11025)
        self.assertEqual(self.G.rank, 3)
        self.assertEqual(self.G.reduce((10, -1, 49)), (1, 24, 0))
        self.assertEqual(self.G.sub((0, 0, 0), (1, 1, 1)), (8, 24, 48))
        self.assertEqual(finite.FiniteGroup((7,)).reduce(9), (2,))
        with self.assertRaises(ValueError):
            self.G.reduce((1, 2))
        with self.assertRaises(ValueError):
            finite.FiniteGroup((1, 3))

    def test_indicator(self):
        array = self.G.indicator([(0, 0, 0), (9, 25, 49), (1, 2, 3)])
        self.assertEqual(array.shape, (9, 25, 49))
        self.assertEqual(int(array.sum()), 2)

    def test_to_dict(self):
        self.assertEqual(self.G.to_dict(), self.group_dict)

    def test_from_dict(self):
        self.assertEqual(finite.FiniteGroup.from_dict(self.group_dict),
                         self.G)


class TestDiscreteCube(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.primes = (3, 5, 7)
        self.G = finite.FiniteGroup.cube_group(*self.primes)
        self.H0 = finite.discrete_cube(*self.primes)
        self.Gamma0 = finite.gamma0(*self.primes)
        self.Lambda0 = finite.lambda0(*self.primes)
        self.zero = finite.zero_mask_H0(*self.primes)

    def test_sizes(self):
        self.assertEqual(len(self.H0), 105)
        self.assertEqual(len(self.Gamma0), 105)
        self.assertEqual(len(self.Lambda0), 45)
        p, q, r = self.primes
        self.assertTrue(len(self.Lambda0) < p*q + q*r + r*p < 3*q*r <= p*q*r)

    def test_invalid_primes(self):
        for primes in ((2, 5, 7), (3, 9, 11), (5, 3, 7), (3, 3, 5)):
            with self.assertRaises(ValueError):
                finite.discrete_cube(*primes)

    def test_phi(self):
        p, q, r = self.primes
        self.assertEqual(finite.phi(p, q, r, 1, 0, 0), 1225)
        for x in range(11025):
            self.assertEqual(finite.phi(p, q, r, *finite.phi_inverse(p, q, r,
                                                                     x)), x)
        values = finite.phi_array(p, q, r)
        self.assertEqual(len(np.unique(values)), 11025)
        self.assertEqual(int(values[1, 2, 3]), finite.phi(p, q, r, 1, 2, 3))

    def test_phi_homomorphism(self):
        p, q, r = self.primes
        rng = np.random.default_rng(0)
        for _ in range(200):
            x = tuple(int(a) for a in rng.integers(0, 49, size=3))
            y = tuple(int(a) for a in rng.integers(0, 49, size=3))
            s = self.G.add(x, y)
            self.assertEqual(finite.phi(p, q, r, *s),
                             (finite.phi(p, q, r, *x)
                              + finite.phi(p, q, r, *y)) % 11025)

    def test_zero_set(self):
        is_zero = finite.ft_zero_set_H0(*self.primes)
        self.assertTrue(is_zero((3, 0, 0)))
        self.assertTrue(is_zero((1, 10, 1)))
        self.assertFalse(is_zero((0, 0, 0)))
        self.assertFalse(is_zero((1, 1, 1)))
        np.testing.assert_array_equal(self.G.mask_of(is_zero), self.zero)

    def test_orthogonality(self):
        for E in (self.Gamma0, self.Lambda0):
            certificate = finite.group_pairwise_orthogonal(E, self.zero,
                                                           self.G)
            self.assertTrue(certificate.passed)
        bad = finite.group_pairwise_orthogonal([(0, 0, 0), (1, 1, 1)],
                                               self.zero, self.G)
        self.assertTrue(bad.failed)
        self.assertEqual(bad.witness, [[0, 0, 0], [1, 1, 1]])

    def test_exhaustive_maximality(self):
        certificate = finite.exhaustive_maximality(self.Lambda0, self.zero,
                                                   self.G)
        self.assertTrue(certificate.passed)
        self.assertEqual(certificate.details['tests'], 11025*45)
        self.assertTrue(finite.exhaustive_maximality(self.Gamma0, self.zero,
                                                     self.G).passed)
        punctured = self.Lambda0 - {(0, 0, 0)}
        certificate = finite.exhaustive_maximality(punctured, self.zero,
                                                   self.G)
        self.assertTrue(certificate.failed)
        self.assertEqual(certificate.witness, [0, 0, 0])

    def test_exhaustive_predicate(self):
        G = finite.FiniteGroup((9, 9))
        certificate = finite.exhaustive_maximality(
            [(0, 0), (0, 3), (0, 6)], lambda x: x[1] % 3 == 0 and x[1] != 0,
            G)
        self.assertTrue(certificate.passed)

    def test_bound(self):
        with self.assertRaises(BoundExceeded):
            finite.exhaustive_maximality(self.Lambda0, self.zero, self.G,
                                         bound=1000)

    def test_tiling(self):
        self.assertTrue(finite.tiling_check(self.H0, self.Gamma0, self.G))
        self.assertFalse(finite.tiling_check(self.H0, self.Lambda0, self.G))

    def test_spectrum(self):
        certificate = finite.spectrum_check(self.Gamma0, self.zero, self.H0,
                                            self.G)
        self.assertTrue(certificate.passed)
        certificate = finite.spectrum_check(self.Lambda0, self.zero, self.H0,
                                            self.G)
        self.assertTrue(certificate.failed)
        self.assertEqual(certificate.details['size'], 45)

    def test_greedy(self):
        members, certificate = finite.greedy_maximal_extension(
            [(0, 0, 0)], self.zero, self.G, target_size=105, seed=0)
        self.assertTrue(certificate.evidence_only)
        self.assertIn((0, 0, 0), members)
        self.assertTrue(finite.group_pairwise_orthogonal(
            members, self.zero, self.G).passed)
        self.assertTrue(finite.exhaustive_maximality(
            members, self.zero, self.G).passed)
        members, certificate = finite.greedy_maximal_extension(
            self.Lambda0, self.zero, self.G, target_size=105)
        self.assertEqual(sorted(members), sorted(self.Lambda0))
        self.assertTrue(certificate.failed)

    def test_no_overflow(self):
        holds, largest, chain = finite.no_overflow_check(3, 5, 7,
                                                         verbose=True)
        self.assertTrue(holds)
        self.assertEqual(largest, 5564)
        self.assertEqual(chain['N'], 11025)
        self.assertTrue(chain['holds'])
        self.assertTrue(finite.no_overflow_check(5, 7, 11))


if __name__ == '__main__':
    unittest.main()
