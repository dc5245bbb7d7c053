# -*- coding: utf-8 -*-
"""
orthopack.constructions.families

Exact descriptors of possibly infinite point sets in R^d. A FamilySet is a
finite union of families, each a point, a line or plane of integer steps,
a punctured lattice, a translated lattice or a product of two families.
"""

import itertools

from more_itertools import unique_everseen

from orthopack import _orthopackBase, _check_dimension
from orthopack.cube import Vector, as_vector
from orthopack.exactreal import SymbolicReal
from orthopack.io.json import remove_class


def _nonzero_range(bound):
    return [k for k in range(-bound, bound + 1) if k != 0]


def _unit(d, axis):
    return tuple(int(i == axis) for i in range(d))


def _check_axis(axis, d):
    if int(axis) != axis or not 0 <= axis < d:
        err_msg = 'Axis {} is out of range for dimension {}.'.format(axis, d)
        raise ValueError(err_msg)
    return int(axis)


def _integer_offset(x, y):
    """Integer x - y, or None if the difference is not an integer"""
    diff = x - y
    if diff.is_integer():
        return int(diff.rat)
    return None


class Family(_orthopackBase):
    """Parent class of all family variants. Functionality:

    - ``contains`` decides membership exactly
    - ``truncate`` enumerates the members within a window
    - ``cover`` lists translated subspaces containing the family"""

    variant = None

    @property
    def d(self):
        raise NotImplementedError

    def symbols(self):
        return ()

    def contains(self, v):
        raise NotImplementedError

    def truncate(self, window, kmax):
        raise NotImplementedError

    def cover(self):
        raise NotImplementedError

    def __hash__(self):
        return hash(repr(self))

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.describe())

    def describe(self):
        return ''


class Point(Family):
    """Single point

    Attributes
    ----------
        base : Vector
    """

    variant = 'point'

    def __init__(self, base):
        self.base = as_vector(base)

    @property
    def d(self):
        return self.base.d

    def describe(self):
        return str(self.base)

    def symbols(self):
        return self.base.symbols()

    def contains(self, v):
        return as_vector(v) == self.base

    def truncate(self, window, kmax):
        yield self.base

    def cover(self):
        return [(self.base, [])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'base': self.base.to_dict()}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(base=json_obj['base'])


class LineFamily(Family):
    """Points base - k*e_axis for nonzero integers k

    Attributes
    ----------
        base : Vector
        axis : int
            Axis of the integer steps, counted from 0
    """

    variant = 'line'

    def __init__(self, base, axis):
        self.base = as_vector(base)
        self.axis = _check_axis(axis, self.base.d)

    @property
    def d(self):
        return self.base.d

    def describe(self):
        return '{}, axis={}'.format(self.base, self.axis)

    def symbols(self):
        return self.base.symbols()

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d:
            return False
        for axis, (x, b) in enumerate(zip(v, self.base)):
            if axis == self.axis:
                if not (b - x).is_nonzero_integer():
                    return False
            elif x != b:
                return False
        return True

    def truncate(self, window, kmax):
        for k in _nonzero_range(kmax):
            yield self.base.replace(self.axis, self.base[self.axis] - k)

    def cover(self):
        return [(self.base, [_unit(self.d, self.axis)])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'base': self.base.to_dict(), 'axis': self.axis}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(base=json_obj['base'], axis=json_obj['axis'])


class PlaneFamily(Family):
    """Points base + n*e_i - k*e_j for nonzero integers n, k

    Attributes
    ----------
        base : Vector
        axis_i : int
        axis_j : int
            Must differ from ``axis_i``
    """

    variant = 'plane'

    def __init__(self, base, axis_i, axis_j):
        self.base = as_vector(base)
        self.axis_i = _check_axis(axis_i, self.base.d)
        self.axis_j = _check_axis(axis_j, self.base.d)
        if self.axis_i == self.axis_j:
            err_msg = ('PlaneFamily needs two different axes. Received {} '
                       'twice.'.format(axis_i))
            raise ValueError(err_msg)

    @property
    def d(self):
        return self.base.d

    def describe(self):
        return '{}, axes=({}, {})'.format(self.base, self.axis_i, self.axis_j)

    def symbols(self):
        return self.base.symbols()

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d:
            return False
        for axis, (x, b) in enumerate(zip(v, self.base)):
            if axis in (self.axis_i, self.axis_j):
                if not (x - b).is_nonzero_integer():
                    return False
            elif x != b:
                return False
        return True

    def truncate(self, window, kmax):
        for n, k in itertools.product(_nonzero_range(kmax), repeat=2):
            point = self.base.replace(self.axis_i, self.base[self.axis_i] + n)
            yield point.replace(self.axis_j, point[self.axis_j] - k)

    def cover(self):
        return [(self.base, [_unit(self.d, self.axis_i),
                             _unit(self.d, self.axis_j)])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'base': self.base.to_dict(), 'axis_i': self.axis_i,
                'axis_j': self.axis_j}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(base=json_obj['base'], axis_i=json_obj['axis_i'],
                   axis_j=json_obj['axis_j'])


class PuncturedLattice(Family):
    """Integer vectors whose coordinates on ``dims`` are all nonzero

    Attributes
    ----------
        dims : tuple of int
            Axes that must be nonzero
        dimension : int
            Ambient dimension d
    """

    variant = 'punctured_lattice'

    def __init__(self, dims, dimension):
        self.dimension = int(dimension)
        self.dims = tuple(sorted({_check_axis(axis, self.dimension)
                                  for axis in dims}))

    @property
    def d(self):
        return self.dimension

    @property
    def all_dims(self):
        return len(self.dims) == self.dimension

    def describe(self):
        return 'dims={}, d={}'.format(self.dims, self.dimension)

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d or not v.is_integral():
            return False
        return all(not v[axis].is_zero() for axis in self.dims)

    def truncate(self, window, kmax):
        ranges = [_nonzero_range(window) if axis in self.dims
                  else range(-window, window + 1) for axis in range(self.d)]
        for coords in itertools.product(*ranges):
            yield Vector(coords)

    def cover(self):
        return [(Vector.zeros(self.d),
                 [_unit(self.d, axis) for axis in range(self.d)])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'dims': list(self.dims), 'dimension': self.dimension}


class HalfPunctured(Family):
    """Integer vectors (p, q) in Z^n x Z^m with q nonzero

    Attributes
    ----------
        n : int
            Length of the unrestricted block
        m : int
            Length of the block that may not vanish
    """

    variant = 'half_punctured'

    def __init__(self, n, m):
        self.n = int(n)
        self.m = int(m)
        if self.n < 0 or self.m < 1:
            err_msg = ('HalfPunctured needs n >= 0 and m >= 1. Received n={}, '
                       'm={}.'.format(n, m))
            raise ValueError(err_msg)

    @property
    def d(self):
        return self.n + self.m

    def describe(self):
        return 'n={}, m={}'.format(self.n, self.m)

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d or not v.is_integral():
            return False
        return any(not x.is_zero() for x in v[self.n:])

    def truncate(self, window, kmax):
        span = range(-window, window + 1)
        for coords in itertools.product(span, repeat=self.d):
            if any(coords[self.n:]):
                yield Vector(coords)

    def cover(self):
        return [(Vector.zeros(self.d),
                 [_unit(self.d, axis) for axis in range(self.d)])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'n': self.n, 'm': self.m}


class TranslatedLattice(Family):
    """Points base + Z^d

    Attributes
    ----------
        base : Vector
    """

    variant = 'translated_lattice'

    def __init__(self, base):
        self.base = as_vector(base)

    @property
    def d(self):
        return self.base.d

    def describe(self):
        return str(self.base)

    def symbols(self):
        return self.base.symbols()

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d:
            return False
        return all((x - b).is_integer() for x, b in zip(v, self.base))

    def truncate(self, window, kmax):
        """Points of base + Z^d with every coordinate in [-window, window]"""
        from orthopack.exactreal.witness import SymbolWitness
        witness = SymbolWitness()
        spans = [range(-witness.floor(b + window), witness.floor(window - b)
                       + 1) for b in self.base]
        for shift in itertools.product(*spans):
            yield self.base + shift

    def cover(self):
        return [(self.base, [_unit(self.d, axis) for axis in range(self.d)])]

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'base': self.base.to_dict()}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(base=json_obj['base'])


class ProductFamily(Family):
    """Cartesian product of two families, left block first

    Attributes
    ----------
        left : Family
        right : Family
    """

    variant = 'product'

    def __init__(self, left, right):
        self.left = _as_family(left)
        self.right = _as_family(right)

    @property
    def d(self):
        return self.left.d + self.right.d

    def describe(self):
        return '{!r} x {!r}'.format(self.left, self.right)

    def symbols(self):
        return tuple(sorted(set(self.left.symbols())
                            | set(self.right.symbols())))

    def split(self, v):
        v = as_vector(v)
        return Vector(v[:self.left.d]), Vector(v[self.left.d:])

    def contains(self, v):
        v = as_vector(v)
        if v.d != self.d:
            return False
        u, w = self.split(v)
        return self.left.contains(u) and self.right.contains(w)

    def truncate(self, window, kmax):
        right = list(self.right.truncate(window, kmax))
        for u in self.left.truncate(window, kmax):
            for w in right:
                yield u.concat(w)

    def cover(self):
        pieces = []
        shift = self.left.d
        pad_right = (0,)*self.right.d
        pad_left = (0,)*shift
        for (p, basis), (q, other) in itertools.product(self.left.cover(),
                                                        self.right.cover()):
            combined = [tuple(b) + pad_right for b in basis]
            combined += [pad_left + tuple(b) for b in other]
            pieces.append((p.concat(q), combined))
        return pieces

    def to_dict(self):
        return {'class': str(self.__class__), 'variant': self.variant,
                'left': self.left.to_dict(), 'right': self.right.to_dict()}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(left=json_obj['left'], right=json_obj['right'])


_variants = {cls.variant: cls for cls in (Point, LineFamily, PlaneFamily,
                                          PuncturedLattice, HalfPunctured,
                                          TranslatedLattice, ProductFamily)}


def _as_family(obj):
    if isinstance(obj, Family):
        return obj
    try:
        cls = _variants[obj['variant']]
    except (KeyError, TypeError):
        err_msg = ('Cannot read a family from {!r}. Families need a '
                   '"variant" tag among {}.'.format(obj, sorted(_variants)))
        raise ValueError(err_msg)
    return cls.from_dict(obj)


class FamilySet(_orthopackBase):
    """Finite union of families in R^d

    Attributes
    ----------
        dimension : int
            Ambient dimension d
        families : list of Family
            Families of the set. Every family must have dimension d
        name : str, optional
            Label used in reports. Default is ''
    """

    def __init__(self, dimension, families=None, name=''):
        self.dimension = int(dimension)
        self.families = [_as_family(family) for family in families or []]
        self.name = name
        for family in self.families:
            _check_dimension(self.dimension, family.d, what='family')

    @property
    def d(self):
        return self.dimension

    def __len__(self):
        return len(self.families)

    def __iter__(self):
        return iter(self.families)

    def __getitem__(self, index):
        return self.families[index]

    def __repr__(self):
        return 'FamilySet(d={}, families={})'.format(self.dimension,
                                                     self.families)

    def symbols(self):
        names = set()
        for family in self.families:
            names.update(family.symbols())
        return tuple(sorted(names))

    def contains(self, v):
        v = as_vector(v)
        _check_dimension(self.dimension, v.d)
        return any(family.contains(v) for family in self.families)

    def truncate(self, window, kmax):
        """Members with parameters in [-kmax, kmax] and lattice coordinates
        in [-window, window], in family order

        Parameters
        ----------
            window : int
                Bound of lattice coordinates
            kmax : int
                Bound of family parameters
        Returns
        -------
            points : list of Vector
        """
        if window < 1 or kmax < 1:
            err_msg = ('Truncation bounds must be at least 1. Received '
                       'window={}, kmax={}.'.format(window, kmax))
            raise ValueError(err_msg)
        return list(unique_everseen(itertools.chain.from_iterable(
            family.truncate(window, kmax) for family in self.families)))

    def overlaps(self, window, kmax):
        """Pairs of family indices sharing a point within the truncation"""
        found = []
        truncated = [set(family.truncate(window, kmax))
                     for family in self.families]
        for i, j in itertools.combinations(range(len(self.families)), 2):
            if truncated[i] & truncated[j]:
                found.append((i, j))
        return found

    def without(self, index):
        """Copy of the set with one family removed"""
        families = [family for i, family in enumerate(self.families)
                    if i != index]
        name = '{}-minus-{}'.format(self.name, index) if self.name else ''
        return FamilySet(self.dimension, families, name=name)

    def to_dict(self):
        return {'class': str(self.__class__), 'dimension': self.dimension,
                'name': self.name,
                'families': [family.to_dict() for family in self.families]}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(dimension=json_obj['dimension'],
                   families=json_obj.get('families', []),
                   name=json_obj.get('name', ''))
