# -*- coding: utf-8 -*-
"""
orthopack.tests.cube.test_orthopack_cube_coverage
Tests for orthopack.cube.coverage
"""
import unittest
from fractions import Fraction

from orthopack.constructions import thin3d, thick3d, lattice
from orthopack.cube import Vector, Slab, slab_coverage_fraction
from orthopack.cube.coverage import union_volume
from orthopack.exactreal import SymbolicReal, SymbolWitness
from orthopack.exceptions import Undecidable


class TestUnionVolume(unittest.TestCase):
    def test_union_volume(self):
        half = Fraction(1, 2)
        boxes = [[(0, 1), (0, 1)], [(half, 1 + half), (0, 1)]]
        self.assertEqual(union_volume(boxes, 2), Fraction(3, 2))
        self.assertEqual(union_volume([], 2), 0)
        nested = [[(0, 2), (0, 2), (0, 2)], [(0, 1), (0, 1), (0, 1)]]
        self.assertEqual(union_volume(nested, 3), 8)


class TestSlabCoverage(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self.slab = Slab(axis=0, offset=Fraction(-1, 2))
        self.witness = SymbolWitness.default()

    def test_lattice(self):
        S = lattice(3).truncate(3, 3)
        lower, upper = slab_coverage_fraction(S, self.slab, 3,
                                              witness=self.witness)
        self.assertTrue(lower <= 1 <= upper)
        self.assertEqual(lower, 1)

    def test_thin3d(self):
        F = thin3d()
        uppers = []
        for W in (3, 4, 5):
            lower, upper = slab_coverage_fraction(F.truncate(W, W), self.slab,
                                                  W, witness=self.witness)
            self.assertTrue(0 <= lower <= upper <= 1)
            uppers.append(upper)
        self.assertTrue(uppers[0] > uppers[1] > uppers[2])
        self.assertTrue(uppers[2] < Fraction(1, 2))

    def test_thick3d(self):
        F = thick3d()
        _, upper = slab_coverage_fraction(F.truncate(5, 5), self.slab, 5,
                                          witness=self.witness)
        self.assertTrue(upper < Fraction(1, 5))

    def test_errors(self):
        self.assertEqual(slab_coverage_fraction([], self.slab, 3), (0, 0))
        with self.assertRaises(ValueError):
            slab_coverage_fraction([Vector([0])], self.slab, 3)
        alpha = SymbolicReal.symbol('alpha')
        with self.assertRaises(ValueError):
            slab_coverage_fraction([Vector([0, 0])], Slab(0, alpha), 3)

    def test_refinement(self):
        alpha = SymbolicReal.symbol('alpha')
        S = [Vector([0, alpha, 0])]
        lower, upper = slab_coverage_fraction(S, self.slab, 3,
                                              witness=self.witness)
        self.assertTrue(0 < upper - lower <= Fraction(1, 10**9))
        tight = Fraction(1, 10**20)
        lower, upper = slab_coverage_fraction(S, self.slab, 3,
                                              witness=self.witness,
                                              tolerance=tight)
        self.assertTrue(0 < upper - lower <= tight)
        self.assertTrue(lower < Fraction(1, 36) < upper)
        with self.assertRaises(Undecidable):
            slab_coverage_fraction(S, self.slab, 3, witness=self.witness,
                                   tolerance=0)


if __name__ == '__main__':
    unittest.main()
