# -*- coding: utf-8 -*-
"""
orthopack.tests.constructions.test_orthopack_constructions
Tests for orthopack.constructions
"""
import unittest
from fractions import Fraction

from orthopack import constructions as con
from orthopack.constructions.families import (FamilySet, Point, LineFamily,
                                              PlaneFamily, HalfPunctured,
                                              TranslatedLattice,
                                              ProductFamily)
from orthopack.cube import Vector, pairwise_orthogonal
from orthopack.exactreal import SymbolicReal, SymbolWitness
from orthopack.exceptions import UnsupportedProduct


class TestGenerators(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.alpha = SymbolicReal.symbol('alpha')
        self.beta = SymbolicReal.symbol('beta')
        self.gamma = SymbolicReal.symbol('gamma')

    def test_thin3d(self):
        F = con.thin3d()
        self.assertEqual(F.dimension, 3)
        self.assertEqual(len(F), 4)
        self.assertEqual(F.symbols(), ('alpha', 'beta', 'gamma'))
        self.assertEqual(len(F.truncate(4, 4)), 193)
        self.assertTrue(F.contains(Vector([0, 0, 0])))
        self.assertTrue(F.contains(Vector([2, self.beta - 3, self.gamma])))
        self.assertTrue(F.contains(Vector([self.alpha - 1, self.beta, 5])))
        self.assertFalse(F.contains(Vector([0, self.beta, self.gamma])))
        self.assertFalse(F.contains(Vector([1, 1, 1])))

    def test_thick3d(self):
        F = con.thick3d()
        self.assertEqual(len(F.truncate(3, 3)), 234)
        self.assertTrue(F.contains(Vector([1, -2, 3])))
        self.assertFalse(F.contains(Vector([1, 0, 3])))
        self.assertTrue(F.contains(Vector([self.alpha, 0, self.gamma + 2])))
        self.assertFalse(F.contains(Vector([self.alpha, 0, self.gamma])))

    def test_truncation_orthogonal(self):
        for F in (con.thin3d(), con.thick3d()):
            certificate = pairwise_orthogonal(F.truncate(2, 2))
            self.assertTrue(certificate.passed)
            self.assertEqual(F.overlaps(2, 2), [])

    def test_symbol_names(self):
        F = con.thin3d('a', 'b', 'c')
        self.assertEqual(F.symbols(), ('a', 'b', 'c'))
        with self.assertRaises(ValueError):
            con.thin3d('a', 'a', 'c')

    def test_lattice(self):
        Z2 = con.lattice(2)
        self.assertEqual(len(Z2.truncate(2, 1)), 25)
        self.assertTrue(con.is_known_spectrum(Z2))
        shifted = con.lattice(1, base=['1/2'])
        self.assertTrue(shifted.contains(Vector(['-3/2'])))
        self.assertFalse(shifted.contains(Vector([0])))
        self.assertEqual(len(con.empty(3)), 0)
        self.assertEqual(con.empty(3).truncate(2, 2), [])

    def test_lattice_window_by_value(self):
        half = FamilySet(2, [TranslatedLattice(Vector(['1/2', 0]))])
        points = half.truncate(3, 3)
        self.assertEqual(len(points), 42)
        for point in points:
            for x in point:
                self.assertLessEqual(abs(x.rat), 3)
        shifted = FamilySet(2, [TranslatedLattice(Vector(['1/2',
                                                          self.alpha]))])
        witness = SymbolWitness.default()
        points = shifted.truncate(2, 2)
        self.assertEqual(len(points), 16)
        for point in points:
            for x in point:
                lo, hi = witness.enclose(x)
                self.assertTrue(-2 <= lo and hi <= 2)

    def test_truncation_bounds(self):
        with self.assertRaises(ValueError):
            con.thin3d().truncate(0, 3)

    def test_presets(self):
        self.assertEqual(set(con.presets),
                         {'thick3d', 'thin3d', 'lattice', 'empty', 'gamma'})


class TestCombinators(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.thin = con.thin3d()

    def test_lift(self):
        lifted = con.lift(self.thin, 1)
        self.assertEqual(lifted.dimension, 4)
        self.assertEqual(len(lifted), 5)
        self.assertIsInstance(lifted.families[0], Point)
        self.assertIsInstance(lifted.families[1], PlaneFamily)
        self.assertIsInstance(lifted.families[-1], HalfPunctured)
        self.assertTrue(lifted.contains(Vector([0, 0, 0, 3])))
        self.assertTrue(lifted.contains(Vector([5, 0, 0, -1])))
        self.assertFalse(lifted.contains(Vector([5, 0, 0, 0])))
        with self.assertRaises(ValueError):
            con.lift(self.thin, 0)

    def test_product_simplification(self):
        point = FamilySet(1, [Point(Vector([0]))])
        line = FamilySet(1, [LineFamily(Vector(['1/2']), axis=0)])
        self.assertIsInstance(con.product(point, point).families[0], Point)
        self.assertIsInstance(con.product(point, line).families[0],
                              LineFamily)
        self.assertIsInstance(con.product(line, line).families[0],
                              PlaneFamily)
        lattices = con.product(con.lattice(2), con.lattice(1))
        self.assertIsInstance(lattices.families[0], TranslatedLattice)
        self.assertTrue(con.is_known_spectrum(lattices))

    def test_product_membership(self):
        P = con.product(self.thin, con.lattice(1))
        self.assertEqual(P.dimension, 4)
        self.assertIsInstance(P.families[1], ProductFamily)
        beta = SymbolicReal.symbol('beta')
        gamma = SymbolicReal.symbol('gamma')
        self.assertTrue(P.contains(Vector([1, beta - 1, gamma, 7])))
        self.assertFalse(P.contains(Vector([1, beta - 1, gamma, '1/2'])))
        self.assertEqual(len(P.truncate(1, 1)), (1 + 3*4)*3)

    def test_unknown_family(self):
        class Custom(Point):
            variant = 'custom'
        custom = FamilySet(1, [Custom(Vector([0]))])
        with self.assertRaises(UnsupportedProduct):
            con.product(custom, con.lattice(1))

    def test_gamma_product(self):
        self.assertEqual(con.gamma_product(3).to_dict()['families'],
                         self.thin.to_dict()['families'])
        self.assertTrue(con.is_known_spectrum(con.gamma_product(2)))
        self.assertEqual(con.gamma_product(4).dimension, 4)
        self.assertEqual(len(con.gamma_product(6)), 16)
        with self.assertRaises(ValueError):
            con.gamma_product(0)

    def test_affine_cover(self):
        self.assertEqual(con.affine_dimension(con.affine_cover(self.thin)), 2)
        squared = con.product(self.thin, self.thin)
        self.assertEqual(con.affine_dimension(con.affine_cover(squared)), 4)
        self.assertEqual(
            con.affine_dimension(con.affine_cover(con.lattice(3))), 3)
        self.assertEqual(con.affine_dimension([]), 0)

    def test_mutants(self):
        mutants = con.mutants(self.thin)
        self.assertEqual(len(mutants), 4)
        for mutant in mutants:
            self.assertEqual(len(mutant), 3)
        self.assertFalse(mutants[0].contains(Vector([0, 0, 0])))

    def test_membership(self):
        self.assertTrue(con.membership(self.thin, Vector([0, 0, 0])))
        with self.assertRaises(ValueError):
            con.membership(self.thin, Vector([0, 0]))

    def test_dict(self):
        for F in (self.thin, con.thick3d(), con.lift(self.thin, 2),
                  con.product(self.thin, con.lattice(1))):
            self.assertEqual(FamilySet.from_dict(F.to_dict()), F)


class TestOneDimensional(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.points = con.one_dim_packing_example(3)

    def test_example(self):
        values = [v[0].rat for v in self.points]
        self.assertEqual(values, [Fraction(-11, 4), Fraction(-7, 4),
                                  Fraction(-3, 4), Fraction(3, 4),
                                  Fraction(7, 4), Fraction(11, 4)])
        with self.assertRaises(ValueError):
            con.one_dim_packing_example(0)

    def test_gaps(self):
        self.assertEqual(con.one_dim_packing_gaps(self.points, -3, 3), [])
        self.assertEqual(con.one_dim_packing_gaps(self.points, -5, 5),
                         [(Fraction(-5), Fraction(-15, 4)),
                          (Fraction(15, 4), Fraction(5))])
        fewer = [v for v in self.points if v[0].rat != Fraction(3, 4)]
        self.assertEqual(con.one_dim_packing_gaps(fewer, -1, 1),
                         [(Fraction(1, 4), Fraction(3, 4))])

    def test_gaps_symbolic(self):
        with self.assertRaises(ValueError):
            con.one_dim_packing_gaps([Vector([SymbolicReal.symbol('alpha')])],
                                     -1, 1)


if __name__ == '__main__':
    unittest.main()
