# -*- coding: utf-8 -*-
"""
orthopack.constructions.square

Every finite orthogonal set of the unit square extends to a spectrum of the
form {(n, k + t(n)) : n, k in Z} or its mirror image. This module finds
that spectrum.
"""

import logging

from orthopack import _orthopackBase, _check_dimension
from orthopack.cube import Vector, as_vector, pairwise_orthogonal
from orthopack.exactreal import SymbolicReal
from orthopack.exceptions import Inconsistent, NotOrthogonal
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


class SquareSpectrum(_orthopackBase):
    """Spectrum origin + {n e_axis + (k + t(n)) e_other : n, k in Z}

    Attributes
    ----------
        axis : int
            Axis (0 or 1) along which the spectrum is a union of integer
            columns
        origin : Vector
            Translation applied after the column construction
        offsets : dict
            Column index n mapped to the offset t(n), a SymbolicReal with
            rational part in [0, 1). Unlisted columns use t(n) = 0
    """

    def __init__(self, axis, origin, offsets=None):
        if axis not in (0, 1):
            err_msg = 'SquareSpectrum axis must be 0 or 1. Received {}.'
            raise ValueError(err_msg.format(axis))
        self.axis = axis
        self.origin = as_vector(origin)
        _check_dimension(2, self.origin.d)
        self.offsets = {int(n): SymbolicReal.coerce(t)
                        for n, t in (offsets or {}).items()}

    @property
    def other(self):
        return 1 - self.axis

    def t(self, n):
        return self.offsets.get(n, SymbolicReal(0))

    def contains(self, v):
        """Exact membership test

        Parameters
        ----------
            v : Vector
        Returns
        -------
            is_member : bool
        """
        shifted = as_vector(v) - self.origin
        column = shifted[self.axis]
        if not column.is_integer():
            return False
        n = int(column.rat)
        return (shifted[self.other] - self.t(n)).is_integer()

    def truncate(self, kmax):
        points = []
        for n in range(-kmax, kmax + 1):
            for k in range(-kmax, kmax + 1):
                coords = [None, None]
                coords[self.axis] = SymbolicReal(n)
                coords[self.other] = self.t(n) + k
                points.append(Vector(coords) + self.origin)
        return points

    def to_dict(self):
        return {'class': str(self.__class__), 'axis': self.axis,
                'origin': self.origin.to_dict(),
                'offsets': {str(n): t.to_dict()
                            for n, t in sorted(self.offsets.items())}}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(axis=json_obj['axis'], origin=json_obj['origin'],
                   offsets=json_obj.get('offsets', {}))


def _column_offsets(points, axis):
    """Offsets t(n) of the columns along ``axis``, or None if some point
    leaves the integer columns"""
    other = 1 - axis
    offsets = {}
    for point in points:
        if not point[axis].is_integer():
            return None
        n = int(point[axis].rat)
        t, _ = point[other].split()
        if n in offsets:
            if offsets[n] != t:
                err_msg = ('Points in column {} along axis {} differ by a '
                           'non-integer: offsets {} and {}.'
                           ''.format(n, axis, offsets[n], t))
                raise Inconsistent(err_msg)
        else:
            offsets[n] = t
    return offsets


def embed_square(points):
    """Embeds a finite orthogonal set of the square into a spectrum

    A point of the set is moved to the origin. The differences then lie in
    Z x R or in R x Z; the first axis that works is used and the columns it
    leaves unconstrained get offset 0.

    Parameters
    ----------
        points : list of Vector
            Finite orthogonal set in R^2
    Returns
    -------
        spectrum : SquareSpectrum
            Spectrum containing every input point
    Raises
    ------
        NotOrthogonal
            If the input is not pairwise orthogonal
        Inconsistent
            If neither axis accommodates the differences, which cannot
            happen for an orthogonal set
    """
    points = [as_vector(v) for v in points]
    if not points:
        return SquareSpectrum(0, Vector.zeros(2))
    for point in points:
        _check_dimension(2, point.d)
    certificate = pairwise_orthogonal(points)
    if not certificate.passed:
        err_msg = ('Cannot embed a set that is not orthogonal. Offending '
                   'pair: {}, {}.'.format(*certificate.witness))
        raise NotOrthogonal(err_msg)
    origin = points[0]
    shifted = [point - origin for point in points]
    for axis in (0, 1):
        offsets = _column_offsets(shifted, axis)
        if offsets is not None:
            logger.debug('Embedded %d points along axis %d', len(points),
                         axis)
            return SquareSpectrum(axis, origin, offsets)
    err_msg = ('Differences of {} lie neither in Z x R nor in R x Z.'
               ''.format(points))
    raise Inconsistent(err_msg)
