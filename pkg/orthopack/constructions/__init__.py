# -*- coding: utf-8 -*-
"""
orthopack.constructions

Generators for the explicit orthogonal sets of the unit cube: the thick and
thin three dimensional maximal sets, lifts to higher dimension, products,
the lattice Z^d and a one dimensional maximal packing.
"""

import itertools
from fractions import Fraction

from orthopack import constants as c
from orthopack.cube import Vector, as_vector
from orthopack.exactreal import SymbolicReal
from orthopack.exceptions import UnsupportedProduct
from orthopack.constructions.families import (FamilySet, Family, Point,
                                              LineFamily, PlaneFamily,
                                              PuncturedLattice, HalfPunctured,
                                              TranslatedLattice, ProductFamily)


def _distinct_symbols(alpha, beta, gamma):
    names = (alpha, beta, gamma)
    if len(set(names)) != 3:
        err_msg = ('The three symbols must be distinct. Received {}.'
                   ''.format(', '.join(names)))
        raise ValueError(err_msg)
    return [SymbolicReal.symbol(name) for name in names]


def thick3d(alpha='alpha', beta='beta', gamma='gamma'):
    """Maximal orthogonal set made of three lines and the punctured lattice

    The set is A ∪ B where A holds (0, β-k, γ), (α, 0, γ-k), (α-k, β, 0)
    for nonzero integers k and B holds the integer vectors with no zero
    coordinate.

    Parameters
    ----------
        alpha : str, optional
        beta : str, optional
        gamma : str, optional
            Names of three distinct symbols
    Returns
    -------
        family_set : FamilySet
    Raises
    ------
        ValueError
            If two symbol names coincide
    """
    a, b, g = _distinct_symbols(alpha, beta, gamma)
    families = [
        LineFamily(Vector([0, b, g]), axis=1),
        LineFamily(Vector([a, 0, g]), axis=2),
        LineFamily(Vector([a, b, 0]), axis=0),
        PuncturedLattice(dims=(0, 1, 2), dimension=3),
    ]
    return FamilySet(3, families, name='thick3d')


def thin3d(alpha='alpha', beta='beta', gamma='gamma'):
    """Maximal orthogonal set contained in three planes and the origin

    The set holds (0, 0, 0), (n, β-k, γ), (α, n, γ-k) and (α-k, β, n) for
    nonzero integers n and k.

    Parameters
    ----------
        alpha : str, optional
        beta : str, optional
        gamma : str, optional
            Names of three distinct symbols
    Returns
    -------
        family_set : FamilySet
    Raises
    ------
        ValueError
            If two symbol names coincide
    """
    a, b, g = _distinct_symbols(alpha, beta, gamma)
    families = [
        Point(Vector.zeros(3)),
        PlaneFamily(Vector([0, b, g]), axis_i=0, axis_j=1),
        PlaneFamily(Vector([a, 0, g]), axis_i=1, axis_j=2),
        PlaneFamily(Vector([a, b, 0]), axis_i=2, axis_j=0),
    ]
    return FamilySet(3, families, name='thin3d')


def lattice(dimension, base=None):
    """The spectrum Z^d, or a translate base + Z^d"""
    base = Vector.zeros(dimension) if base is None else as_vector(base)
    return FamilySet(dimension, [TranslatedLattice(base)], name='lattice')


def empty(dimension):
    return FamilySet(dimension, [], name='empty')


def _product_family(left, right):
    """Product of two families, simplified to a plain variant when possible

    Parameters
    ----------
        left : Family
        right : Family
    Returns
    -------
        family : Family
    Raises
    ------
        UnsupportedProduct
            If either factor is not one of the known variants
    """
    known = (Point, LineFamily, PlaneFamily, PuncturedLattice, HalfPunctured,
             TranslatedLattice, ProductFamily)
    for family in (left, right):
        if type(family) not in known:
            err_msg = ('Cannot form a product with {} since it is not a '
                       'known family variant.'.format(type(family).__name__))
            raise UnsupportedProduct(err_msg)
    shift = left.d
    if isinstance(left, Point) and isinstance(right, Point):
        return Point(left.base.concat(right.base))
    if isinstance(left, Point) and isinstance(right, LineFamily):
        return LineFamily(left.base.concat(right.base), shift + right.axis)
    if isinstance(left, LineFamily) and isinstance(right, Point):
        return LineFamily(left.base.concat(right.base), left.axis)
    if isinstance(left, Point) and isinstance(right, PlaneFamily):
        return PlaneFamily(left.base.concat(right.base),
                           shift + right.axis_i, shift + right.axis_j)
    if isinstance(left, PlaneFamily) and isinstance(right, Point):
        return PlaneFamily(left.base.concat(right.base), left.axis_i,
                           left.axis_j)
    if isinstance(left, LineFamily) and isinstance(right, LineFamily):
        # (b - k e_j, c - l e_m) = (b, c) + (-k) e_j - l e_(n+m)
        return PlaneFamily(left.base.concat(right.base), left.axis,
                           shift + right.axis)
    if (isinstance(left, TranslatedLattice)
            and isinstance(right, TranslatedLattice)):
        return TranslatedLattice(left.base.concat(right.base))
    return ProductFamily(left, right)


def product(A, B):
    """Cartesian product A x B, expanded distributively over the families

    Parameters
    ----------
        A : FamilySet
            Set in R^n
        B : FamilySet
            Set in R^m
    Returns
    -------
        family_set : FamilySet
            Set in R^(n+m)
    Raises
    ------
        UnsupportedProduct
            If a family is not one of the known variants
    """
    families = [_product_family(left, right)
                for left, right in itertools.product(A.families, B.families)]
    name = '{}x{}'.format(A.name or 'A', B.name or 'B')
    return FamilySet(A.dimension + B.dimension, families, name=name)


def lift(F, m):
    """Lifts a maximal set of R^n to R^(n+m)

    The result is {(λ, 0) : λ in F} together with every integer vector
    (p, q) of Z^n x Z^m with q nonzero.

    Parameters
    ----------
        F : FamilySet
            Set in R^n
        m : int
            Number of added dimensions, at least 1
    Returns
    -------
        family_set : FamilySet
    """
    if int(m) != m or m < 1:
        err_msg = 'lift needs m >= 1. Received {}.'.format(m)
        raise ValueError(err_msg)
    origin = Point(Vector.zeros(m))
    families = [_product_family(family, origin) for family in F.families]
    families.append(HalfPunctured(F.dimension, m))
    name = 'lift({},{})'.format(F.name or 'F', m)
    return FamilySet(F.dimension + m, families, name=name)


def gamma_product(dimension, alpha='alpha', beta='beta', gamma='gamma'):
    """The set thin3d x ... x thin3d x Z^r of R^d with d = 3q + r

    Parameters
    ----------
        dimension : int
            d, at least 1
        alpha, beta, gamma : str, optional
            Symbols of the thin3d factors
    Returns
    -------
        family_set : FamilySet
    """
    if int(dimension) != dimension or dimension < 1:
        err_msg = 'Dimension must be a positive integer. Received {}.'
        raise ValueError(err_msg.format(dimension))
    q, r = divmod(int(dimension), 3)
    factors = [thin3d(alpha, beta, gamma) for _ in range(q)]
    if r:
        factors.append(lattice(r))
    result = factors[0]
    for factor in factors[1:]:
        result = product(result, factor)
    result.name = 'gamma{}'.format(dimension)
    return result


def is_known_spectrum(F):
    """True iff F is a single translated lattice, hence a complete spectrum.
    Products of known spectra simplify to a single translated lattice."""
    return (len(F.families) == 1
            and isinstance(F.families[0], TranslatedLattice))


def affine_cover(F):
    """Translated subspaces covering F, read off its families

    Parameters
    ----------
        F : FamilySet
    Returns
    -------
        cover : list of (Vector, list of tuple)
            Each entry is a point and a rational basis of the subspace
            through it
    """
    return list(itertools.chain.from_iterable(family.cover()
                                              for family in F.families))


def affine_dimension(cover):
    return max((len(basis) for _, basis in cover), default=0)


def membership(F, v):
    return F.contains(v)


def truncate(F, window=None, kmax=None):
    if window is None:
        window = c.default('window')
    if kmax is None:
        kmax = c.default('kmax')
    return F.truncate(window, kmax)


def mutants(F):
    """Every copy of F with exactly one family deleted"""
    return [F.without(index) for index in range(len(F.families))]


def one_dim_packing_example(count):
    """The maximal packing {±(n - 1/4) : 1 <= n <= count} of the line

    Parameters
    ----------
        count : int
            At least 1
    Returns
    -------
        points : list of Vector
            One dimensional vectors in increasing order
    """
    if int(count) != count or count < 1:
        err_msg = 'count must be a positive integer. Received {}.'
        raise ValueError(err_msg.format(count))
    quarter = Fraction(1, 4)
    values = [n - quarter for n in range(1, int(count) + 1)]
    values = sorted([-x for x in values] + values)
    return [Vector([x]) for x in values]


def one_dim_packing_gaps(points, lo, hi):
    """Parts of [lo, hi] where one more unit interval could be packed

    Parameters
    ----------
        points : list of Vector
            One dimensional packing with rational coordinates
        lo : Fraction
        hi : Fraction
    Returns
    -------
        gaps : list of (Fraction, Fraction)
            Closed intervals of x with |x - p| >= 1 for every point p
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    blocked = []
    for point in points:
        x = as_vector(point)[0]
        if not x.is_rational():
            err_msg = 'Packing gaps need rational points. Received {}.'
            raise ValueError(err_msg.format(x))
        blocked.append((x.rat - 1, x.rat + 1))
    blocked.sort()
    gaps = []
    cursor = lo
    for start, stop in blocked:
        if start > hi:
            break
        if stop <= cursor:
            continue
        if start >= cursor:
            gaps.append((cursor, start))
        cursor = max(cursor, stop)
        if cursor > hi:
            break
    if cursor <= hi:
        gaps.append((cursor, hi))
    return gaps


#: Named constructions available to the command line interface
presets = {
    'thick3d': thick3d,
    'thin3d': thin3d,
    'lattice': lattice,
    'empty': empty,
    'gamma': gamma_product,
}


from orthopack.constructions.square import embed_square, \
    SquareSpectrum  # noqa: E402
