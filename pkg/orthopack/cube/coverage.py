# -*- coding: utf-8 -*-
"""
orthopack.cube.coverage

Rigorous enclosure of the fraction of a slab covered by translated cubes
"""

import logging
from bisect import bisect_left
from fractions import Fraction

import numpy as np

from orthopack import constants as c
from orthopack.exactreal.witness import SymbolWitness
from orthopack.exceptions import Undecidable

logger = logging.getLogger(__name__)

_half = Fraction(1, 2)


def _clip(box, region):
    clipped = []
    for (lo, hi), (r_lo, r_hi) in zip(box, region):
        lo = max(lo, r_lo)
        hi = min(hi, r_hi)
        if lo >= hi:
            return None
        clipped.append((lo, hi))
    return clipped


def union_volume(boxes, d):
    """Exact volume of a union of axis-aligned boxes

    Parameters
    ----------
        boxes : list of list of (Fraction, Fraction)
            Each box is a list of d (lo, hi) pairs
        d : int
            Dimension
    Returns
    -------
        volume : Fraction
    """
    if not boxes:
        return Fraction(0)
    grids = []
    for axis in range(d):
        grids.append(sorted({bound for box in boxes for bound in box[axis]}))
    covered = np.zeros([len(grid) - 1 for grid in grids], dtype=bool)
    for box in boxes:
        cells = tuple(slice(bisect_left(grid, lo), bisect_left(grid, hi))
                      for grid, (lo, hi) in zip(grids, box))
        covered[cells] = True
    # Contract one axis at a time with the exact cell widths
    volume = covered.astype(object)
    for grid in reversed(grids):
        widths = np.array([hi - lo for lo, hi in zip(grid[:-1], grid[1:])],
                          dtype=object)
        volume = volume.dot(widths)
    return Fraction(volume)


def _coverage_bounds(points, region, witness, bits):
    """(lower, upper) covered volumes with cube positions at ``bits``"""
    d = len(region)
    inner_boxes = []
    outer_boxes = []
    for point in points:
        enclosures = [witness.enclose(x, bits=bits) for x in point]
        outer = _clip([(lo - _half, hi + _half) for lo, hi in enclosures],
                      region)
        if outer is None:
            continue
        outer_boxes.append(outer)
        inner = _clip([(hi - _half, lo + _half) for lo, hi in enclosures],
                      region)
        if inner is not None:
            inner_boxes.append(inner)
    logger.debug('Coverage sweep over %d boxes at %d bits', len(outer_boxes),
                 bits)
    return union_volume(inner_boxes, d), union_volume(outer_boxes, d)


def slab_coverage_fraction(S, slab, L, witness=None, bits=None,
                           tolerance=Fraction(1, 10**9), step=16):
    """Encloses the share of slab ∩ [-L, L]^d covered by the cubes
    [-1/2, 1/2]^d + s for s in S

    Cube positions are taken from witness enclosures. The union of the
    boxes every admissible cube surely covers gives the lower bound and the
    union of the boxes some admissible cube may cover gives the upper bound.
    The positions are refined ``step`` bits at a time, up to
    ``bits + witness.depth``, until the bounds are within ``tolerance``.

    Parameters
    ----------
        S : list of Vector
            Finite set of translations
        slab : Slab
            Slab with a rational offset
        L : int or Fraction
            Half width of the bounding box
        witness : SymbolWitness, optional
            Values of the symbols. Default uses the default presets
        bits : int, optional
            Starting precision of the cube positions. Default is
            ``constants.default('coverage_bits')``
        tolerance : Fraction, optional
            Largest accepted upper - lower. Default is 1e-9
        step : int, optional
            Bits added per refinement. Default is 16
    Returns
    -------
        enclosure : tuple of Fraction
            (lower, upper) bounds of the covered fraction
    Raises
    ------
        ValueError
            If the dimension is below 2 or the slab offset is not rational
        Undecidable
            If the bounds are still further apart than ``tolerance`` at
            the deepest precision
    """
    from orthopack.cube import as_vector

    points = [as_vector(v) for v in S]
    if not points:
        return (Fraction(0), Fraction(0))
    d = points[0].d
    if d < 2:
        err_msg = ('Slab coverage needs dimension at least 2. Received '
                   'dimension {}.'.format(d))
        raise ValueError(err_msg)
    slab.check_dimension(d)
    if not slab.offset.is_rational():
        err_msg = ('Slab offset must be rational to bound the region exactly. '
                   'Received {}.'.format(slab.offset))
        raise ValueError(err_msg)
    if witness is None:
        witness = SymbolWitness()
    if bits is None:
        bits = c.default('coverage_bits')
    L = Fraction(L)
    region = [(-L, L)]*d
    region[slab.axis] = (slab.offset.rat, slab.offset.rat + 1)
    region_volume = Fraction(1)
    for lo, hi in region:
        region_volume *= hi - lo

    for precision in range(bits, bits + witness.depth + 1, max(1, step)):
        inner, outer = _coverage_bounds(points, region, witness, precision)
        lower = inner/region_volume
        upper = min(Fraction(1), outer/region_volume)
        if upper - lower <= tolerance:
            return (lower, upper)
    err_msg = ('Coverage bounds [{}, {}] still differ by more than {} at {} '
               'bits; cube faces could not be separated.'
               ''.format(float(lower), float(upper), float(tolerance),
                         precision))
    raise Undecidable(err_msg)
