# -*- coding: utf-8 -*-

from fractions import Fraction

from orthopack.constructions import (thick3d, thin3d, lattice, lift, product,
                                     one_dim_packing_example)
from orthopack.cube import Vector
from orthopack.exactreal import SymbolicReal
from orthopack.exactreal.witness import SymbolWitness
from orthopack.finite import FiniteGroup, discrete_cube, gamma0, lambda0

alpha = SymbolicReal.symbol('alpha')
beta = SymbolicReal.symbol('beta')
gamma = SymbolicReal.symbol('gamma')

witness = SymbolWitness.default()

thick = thick3d()
thin = thin3d()
Z3 = lattice(3)
thin_lifted = lift(thin, 1)
thin_squared = product(thin, thin)
thin_times_Z = product(thin, lattice(1))

sets = {
    'thick3d': thick,
    'thin3d': thin,
    'Z3': Z3,
    'lift(thin3d,1)': thin_lifted,
    'thin3d x thin3d': thin_squared,
    'thin3d x Z': thin_times_Z,
}

packing_1d = one_dim_packing_example(3)

# First coordinates are distinct integers: an orthogonal set of the square
square_points = [
    Vector([0, 0]),
    Vector([1, alpha]),
    Vector([2, alpha + 1]),
    Vector([-1, Fraction(1, 3)]),
]

cube_group = FiniteGroup.cube_group(3, 5, 7)
H0 = discrete_cube(3, 5, 7)
Gamma0 = gamma0(3, 5, 7)
Lambda0 = lambda0(3, 5, 7)
