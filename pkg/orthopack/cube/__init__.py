# -*- coding: utf-8 -*-
"""
orthopack.cube

Orthogonality geometry of the unit cube. Two frequencies are orthogonal
exactly when their difference lies in the zero set G of the cube's Fourier
transform, i.e. some coordinate of the difference is a nonzero integer.
"""

import itertools
import logging

from orthopack import _orthopackBase, _check_dimension
from orthopack.certificate import Certificate
from orthopack.exactreal import SymbolicReal, compare_abs_lt_one
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


class Vector(_orthopackBase):
    """Point of R^d with SymbolicReal coordinates

    Attributes
    ----------
        coords : list of SymbolicReal
            Coordinates. ints, Fractions and rational strings are coerced
    """

    __slots__ = ('_coords', '_hash')

    def __init__(self, coords):
        self._coords = tuple(SymbolicReal.coerce(x) for x in coords)
        if not self._coords:
            raise ValueError('A Vector needs at least one coordinate.')
        self._hash = None

    @classmethod
    def zeros(cls, d):
        return cls([0]*d)

    @classmethod
    def unit(cls, d, axis, scale=1):
        coords = [0]*d
        coords[axis] = scale
        return cls(coords)

    @property
    def coords(self):
        return self._coords

    @property
    def d(self):
        return len(self._coords)

    def __len__(self):
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, index):
        return self._coords[index]

    def replace(self, axis, value):
        coords = list(self._coords)
        coords[axis] = SymbolicReal.coerce(value)
        return Vector(coords)

    def concat(self, other):
        return Vector(self._coords + tuple(other))

    def symbols(self):
        names = set()
        for x in self._coords:
            names.update(x.symbols)
        return tuple(sorted(names))

    def is_integral(self):
        return all(x.is_integer() for x in self._coords)

    def __add__(self, other):
        _check_dimension(self.d, len(other))
        return Vector([x + y for x, y in zip(self._coords, other)])

    def __sub__(self, other):
        _check_dimension(self.d, len(other))
        return Vector([x - y for x, y in zip(self._coords, other)])

    def __neg__(self):
        return Vector([-x for x in self._coords])

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self._coords == other._coords
        return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._coords)
        return self._hash

    def sort_key(self):
        return tuple(x.sort_key() for x in self._coords)

    def __repr__(self):
        return 'Vector({})'.format(str(self))

    def __str__(self):
        return '({})'.format(', '.join(str(x) for x in self._coords))

    def to_dict(self):
        """Represents object as dictionary with JSON-accepted datatypes

        Returns
        -------
            obj_dict : dict
        """
        return {'class': str(self.__class__),
                'coords': [x.to_dict() for x in self._coords]}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(json_obj['coords'])


def as_vector(value):
    if isinstance(value, Vector):
        return value
    if isinstance(value, dict):
        return Vector.from_dict(value)
    return Vector(value)


class Slab(_orthopackBase):
    """Axis-aligned slab {x : offset <= x[axis] <= offset + 1}

    Attributes
    ----------
        axis : int
            Axis index, counted from 0
        offset : SymbolicReal
            Lower face of the slab
    """

    def __init__(self, axis, offset):
        if int(axis) != axis or axis < 0:
            err_msg = 'Slab axis must be a nonnegative integer. Received {}.'
            raise ValueError(err_msg.format(axis))
        self.axis = int(axis)
        self.offset = SymbolicReal.coerce(offset)

    def check_dimension(self, d):
        if self.axis >= d:
            err_msg = ('Slab axis {} is out of range for dimension {}.'
                       ''.format(self.axis, d))
            raise ValueError(err_msg)

    def to_dict(self):
        return {'class': str(self.__class__), 'axis': self.axis,
                'offset': self.offset.to_dict()}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(axis=json_obj['axis'], offset=json_obj['offset'])


def in_zero_set(v):
    """True iff some coordinate of v is a nonzero integer

    Parameters
    ----------
        v : Vector
    Returns
    -------
        in_G : bool
    """
    return any(x.is_nonzero_integer() for x in as_vector(v))


def orthogonal(lam, mu):
    """True iff the exponentials of lam and mu are orthogonal on the cube

    Parameters
    ----------
        lam : Vector
        mu : Vector
    Returns
    -------
        is_orthogonal : bool
    Raises
    ------
        DimensionMismatch
            If the vectors differ in dimension
    """
    lam = as_vector(lam)
    mu = as_vector(mu)
    _check_dimension(lam.d, mu.d)
    for x, y in zip(lam, mu):
        # Equal symbol parts is the common case; skip building the difference
        if x.symbol_part == y.symbol_part:
            diff = x.rat - y.rat
            if diff != 0 and diff.denominator == 1:
                return True
        elif (x - y).is_nonzero_integer():
            return True
    return False


def _pairs(points):
    return itertools.combinations(range(len(points)), 2)


def pairwise_orthogonal(S):
    """Checks that every pair of distinct entries of S is orthogonal

    Parameters
    ----------
        S : list of Vector
    Returns
    -------
        certificate : Certificate
            'pass', or 'fail' with the first offending pair as witness
    """
    points = [as_vector(v) for v in S]
    for i, j in _pairs(points):
        if not orthogonal(points[i], points[j]):
            logger.info('Pair %s, %s is not orthogonal', points[i], points[j])
            return Certificate(kind='pairwise_orthogonal', verdict='fail',
                               witness=[points[i], points[j]],
                               details={'size': len(points),
                                        'indices': [i, j]})
    return Certificate(kind='pairwise_orthogonal', verdict='pass',
                       details={'size': len(points)})


def separated(lam, mu, witness):
    """True iff the cubes centred at lam and mu overlap in measure zero"""
    lam = as_vector(lam)
    mu = as_vector(mu)
    _check_dimension(lam.d, mu.d)
    return any(not compare_abs_lt_one(x - y, witness)
               for x, y in zip(lam, mu))


def is_packing(S, witness=None):
    """Checks that the unit cubes translated by S do not overlap

    Parameters
    ----------
        S : list of Vector
        witness : SymbolWitness, optional
            Values of the symbols in S. Default uses the default presets
    Returns
    -------
        certificate : Certificate
            'pass', or 'fail' with an overlapping pair as witness
    Raises
    ------
        Undecidable
            Propagated from the magnitude comparisons
    """
    from orthopack.exactreal.witness import SymbolWitness
    points = [as_vector(v) for v in S]
    if witness is None:
        witness = SymbolWitness()
    for i, j in _pairs(points):
        if not separated(points[i], points[j], witness):
            return Certificate(kind='packing', verdict='fail',
                               witness=[points[i], points[j]],
                               details={'size': len(points),
                                        'indices': [i, j],
                                        'witness': witness.presets})
    return Certificate(kind='packing', verdict='pass',
                       details={'size': len(points),
                                'witness': witness.presets})


from orthopack.cube.coverage import slab_coverage_fraction  # noqa: E402
