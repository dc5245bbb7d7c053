# -*- coding: utf-8 -*-
"""
orthopack.verify.discrete

Brute-force extension search over a finite grid of candidates. Every
coordinate of a candidate is a class representative (0, alpha, beta, ...)
plus a small integer, and candidates are tested against a truncation of the
set. Results are evidence, not proofs.
"""

import itertools
import logging

import numpy as np

from orthopack import constants as c
from orthopack.certificate import Certificate
from orthopack.cube import Vector
from orthopack.exactreal import SymbolicReal
from orthopack.exceptions import BoundExceeded

logger = logging.getLogger(__name__)

#: Largest grid the search accepts
max_grid = 2*10**6


def _encode(points, codes):
    """Class codes and integer offsets of every coordinate

    Two coordinates differ by a nonzero integer exactly when their class
    codes agree and their integer offsets differ.
    """
    d = points[0].d if points else 0
    class_arr = np.zeros((len(points), d), dtype=np.int64)
    int_arr = np.zeros((len(points), d), dtype=np.int64)
    for row, point in enumerate(points):
        for axis, x in enumerate(point):
            key = x.class_key()
            if key not in codes:
                codes[key] = len(codes)
            class_arr[row, axis] = codes[key]
            int_arr[row, axis] = x.floor_rat()
    return class_arr, int_arr


def extension_mask(cand_classes, cand_ints, classes, ints, chunk=2048):
    """Which candidates are orthogonal to every point

    Parameters
    ----------
        cand_classes, cand_ints : (n, d) np.ndarray
            Encoded candidates
        classes, ints : (m, d) np.ndarray
            Encoded set points
        chunk : int, optional
            Candidates processed at once. Default is 2048
    Returns
    -------
        mask : (n,) np.ndarray of bool
    """
    n, d = cand_classes.shape
    mask = np.ones(n, dtype=bool)
    if len(classes) == 0:
        return mask
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        orth = np.zeros((stop - start, len(classes)), dtype=bool)
        for axis in range(d):
            same = (cand_classes[start:stop, axis, None]
                    == classes[None, :, axis])
            moved = cand_ints[start:stop, axis, None] != ints[None, :, axis]
            orth |= same & moved
        mask[start:stop] = orth.all(axis=1)
    return mask


def candidate_grid(F, radius=None, symbols=None):
    """Candidates whose coordinates are sigma + z for a class sigma and an
    integer z with |z| <= radius

    Parameters
    ----------
        F : FamilySet
        radius : int, optional
            Default is ``constants.default('grid_radius')``
        symbols : list of str, optional
            Symbol classes in the grid. Default is the symbols of F
    Returns
    -------
        grid : list of Vector
    Raises
    ------
        BoundExceeded
            If the grid has more than ``max_grid`` points
    """
    if radius is None:
        radius = c.default('grid_radius')
    if symbols is None:
        symbols = F.symbols()
    sigmas = [SymbolicReal(0)] + [SymbolicReal.symbol(name)
                                  for name in symbols]
    values = [sigma + z for sigma in sigmas
              for z in range(-radius, radius + 1)]
    size = len(values)**F.dimension
    if size > max_grid:
        err_msg = ('Discretized grid of {} points exceeds the limit of {}. '
                   'Lower the radius.'.format(size, max_grid))
        raise BoundExceeded(err_msg)
    return [Vector(coords)
            for coords in itertools.product(values, repeat=F.dimension)]


def discretized_extension_search(F, radius=None, kmax=None, symbols=None,
                                 kind='discretized_extension', limit=20):
    """Searches the candidate grid for points extending F

    Parameters
    ----------
        F : FamilySet
        radius : int, optional
            Integer radius of the grid. Default is
            ``constants.default('grid_radius')``
        kmax : int, optional
            Window and parameter bound of the truncation the candidates are
            tested against. Default is ``constants.default('grid_kmax')``
        symbols : list of str, optional
            Symbol classes of the grid. Default is the symbols of F
        kind : str, optional
            Certificate kind. Default is 'discretized_extension'
        limit : int, optional
            Maximum number of extensions listed. Default is 20
    Returns
    -------
        certificate : Certificate
            Evidence-only certificate. 'fail' lists grid points orthogonal
            to the truncation and outside F; 'pass' means none exist
    """
    if kmax is None:
        kmax = c.default('grid_kmax')
    grid = candidate_grid(F, radius=radius, symbols=symbols)
    members = F.truncate(kmax, kmax)
    codes = {}
    classes, ints = _encode(members, codes)
    cand_classes, cand_ints = _encode(grid, codes)
    mask = extension_mask(cand_classes, cand_ints, classes, ints)
    extensions = []
    for index in np.flatnonzero(mask):
        if not F.contains(grid[index]):
            extensions.append(grid[index])
    logger.info('Discretized search over %d candidates found %d extensions',
                len(grid), len(extensions))
    details = {'grid_size': len(grid), 'kmax': kmax,
               'truncation_size': len(members),
               'extensions_found': len(extensions)}
    if extensions:
        return Certificate(kind=kind, verdict='fail', witness=extensions[0],
                           details=dict(details,
                                        extensions=extensions[:limit]),
                           evidence_only=True)
    return Certificate(kind=kind, verdict='pass', details=details,
                       evidence_only=True)
