# -*- coding: utf-8 -*-
"""
orthopack.verify.conditions

Necessary conditions every maximal orthogonal set of the cube satisfies,
checked on finite truncations, plus incompleteness evidence and affine
cover checks.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from math import ceil, floor

from sympy import Matrix

from orthopack import constants as c, _as_list
from orthopack.certificate import Certificate
from orthopack.cube import Slab, as_vector
from orthopack.cube.coverage import slab_coverage_fraction
from orthopack.exactreal.witness import SymbolWitness

logger = logging.getLogger(__name__)


def coordinate_shift_check(S, window=None, limit=20):
    """Checks that coordinates reappear under integer shifts

    For every point λ of S, every axis j and every nonzero integer n with
    λ_j + n in the window, some point of S must have j-th coordinate
    λ_j + n. A value is in the window when its rational part lies in
    [-window, window].

    Parameters
    ----------
        S : list of Vector
            Truncation of the set
        window : int, optional
            Inner window. Default is ``constants.default('inner_window')``
        limit : int, optional
            Maximum number of missing shifts listed. Default is 20
    Returns
    -------
        certificate : Certificate
            'fail' lists missing (point, axis, n) triples
    """
    if window is None:
        window = c.default('inner_window')
    points = [as_vector(v) for v in S]
    values = defaultdict(set)
    for point in points:
        for axis, x in enumerate(point):
            values[axis].add(x)
    missing = []
    checked = 0
    for point in points:
        for axis, x in enumerate(point):
            for n in range(ceil(-window - x.rat), floor(window - x.rat) + 1):
                if n == 0:
                    continue
                checked += 1
                if x + n not in values[axis]:
                    missing.append({'point': point, 'axis': axis, 'n': n})
    details = {'window': window, 'size': len(points), 'checked': checked,
               'missing_count': len(missing)}
    if missing:
        return Certificate(kind='coordinate_shift', verdict='fail',
                           witness=missing[0],
                           details=dict(details, missing=missing[:limit]))
    return Certificate(kind='coordinate_shift', verdict='pass',
                       details=details)


def _slabs_hit(x, witness):
    if x.is_integer():
        return (int(x.rat) - 1, int(x.rat))
    return (witness.floor(x),)


def slab_check(S, window=None, witness=None):
    """Checks that S meets every width one axis slab in the window

    Parameters
    ----------
        S : list of Vector
            Truncation of the set
        window : int, optional
            Slabs [a, a + 1] with -window <= a <= window - 1 are checked.
            Default is ``constants.default('inner_window')``
        witness : SymbolWitness, optional
            Values of the symbols. Default uses the default presets
    Returns
    -------
        certificate : Certificate
            'fail' lists the empty slabs as (axis, a) pairs
    Raises
    ------
        Undecidable
            If a coordinate cannot be placed between consecutive integers
    """
    if window is None:
        window = c.default('inner_window')
    if witness is None:
        witness = SymbolWitness()
    points = [as_vector(v) for v in S]
    d = points[0].d if points else 0
    hit = defaultdict(set)
    for point in points:
        for axis, x in enumerate(point):
            hit[axis].update(_slabs_hit(x, witness))
    empty = [[axis, a] for axis in range(d)
             for a in range(-window, window)
             if a not in hit[axis]]
    details = {'window': window, 'size': len(points), 'empty_slabs': empty}
    if not points:
        return Certificate(kind='slab', verdict='fail', details=details)
    if empty:
        return Certificate(kind='slab', verdict='fail', witness=empty[0],
                           details=details)
    return Certificate(kind='slab', verdict='pass', details=details)


def incompleteness_evidence(F, windows=(3, 4, 5), witness=None, axes=None,
                            offset=Fraction(-1, 2), tolerance=1e-6,
                            bits=None):
    """Coverage of the coordinate slabs by the cubes of growing truncations

    For each window W the set is truncated with window and parameter bound
    W, and the share of slab ∩ [-W, W]^d covered by its cubes is enclosed.
    Enclosures bounded away from 1 suggest the cubes do not tile space.

    Parameters
    ----------
        F : FamilySet
        windows : iterable of int, optional
            Default is (3, 4, 5)
        witness : SymbolWitness, optional
            Values of the symbols. Default uses the default presets
        axes : iterable of int, optional
            Slab axes. Default is every axis
        offset : Fraction, optional
            Lower face of the slabs. Default is -1/2
        tolerance : float, optional
            Evidence requires every upper bound below 1 - tolerance.
            Default is 1e-6
        bits : int, optional
            Precision of cube positions. Default is
            ``constants.default('coverage_bits')``
    Returns
    -------
        certificate : Certificate
            Evidence-only. 'pass' when every enclosure stays below
            1 - tolerance, 'fail' otherwise
    """
    if witness is None:
        witness = SymbolWitness()
    windows = sorted(_as_list(windows))
    axes = list(range(F.dimension)) if axes is None else list(axes)
    enclosures = {}
    uppers = defaultdict(list)
    for W in windows:
        S = F.truncate(W, W)
        enclosures[W] = {}
        for axis in axes:
            lo, hi = slab_coverage_fraction(S, Slab(axis, offset), W,
                                            witness=witness, bits=bits)
            enclosures[W][axis] = [lo, hi]
            uppers[axis].append(hi)
            logger.debug('W=%d axis=%d coverage in [%s, %s]', W, axis,
                         float(lo), float(hi))
    monotone = all(all(b <= a for a, b in zip(values, values[1:]))
                   for values in uppers.values())
    worst = max((hi for values in uppers.values() for hi in values),
                default=Fraction(0))
    constant = max((W*enclosures[W][axis][1] for W in windows
                    for axis in axes), default=Fraction(0))
    evidence = bool(enclosures) and worst < 1 - Fraction(tolerance)
    details = {
        'windows': windows,
        'axes': axes,
        'enclosures': {str(W): {str(axis): [str(lo), str(hi)]
                                for axis, (lo, hi) in row.items()}
                       for W, row in enclosures.items()},
        'max_upper': float(worst),
        'monotone': monotone,
        'constant': float(constant),
        'non_tiling_evidence': evidence,
    }
    return Certificate(kind='incompleteness', verdict='pass' if evidence
                       else 'fail', details=details, evidence_only=True)


def _annihilator(basis, d):
    """Rational rows vanishing exactly on the span of the basis"""
    if not basis:
        return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    null = Matrix([list(b) for b in basis]).nullspace()
    return [[Fraction(int(x.p), int(x.q)) for x in vector] for vector in null]


def _in_subspace(diff, rows):
    components = [[x.rat for x in diff]]
    names = {name for x in diff for name in x.symbols}
    for name in sorted(names):
        components.append([x.coefficient(name) for x in diff])
    return all(sum(a*x for a, x in zip(row, component)) == 0
               for row in rows for component in components)


def affine_cover_check(S, cover, limit=20):
    """Checks that every point lies on one of the translated subspaces

    Symbols are rationally independent, so s - p lies in a rational span
    exactly when its rational part and each symbol's coefficient vector do.

    Parameters
    ----------
        S : list of Vector
        cover : list of (Vector, list of tuple)
            Point and rational basis of each translated subspace
        limit : int, optional
            Maximum number of uncovered points listed. Default is 20
    Returns
    -------
        certificate : Certificate
            'fail' lists uncovered points
    """
    points = [as_vector(v) for v in S]
    d = points[0].d if points else 0
    pieces = [(as_vector(p), _annihilator(basis, len(as_vector(p))))
              for p, basis in cover]
    uncovered = []
    for point in points:
        if not any(_in_subspace(point - p, rows) for p, rows in pieces
                   if p.d == d):
            uncovered.append(point)
    dimension = max((len(basis) for _, basis in cover), default=0)
    details = {'size': len(points), 'pieces': len(pieces),
               'dimension': dimension, 'uncovered_count': len(uncovered)}
    if uncovered:
        return Certificate(kind='affine_cover', verdict='fail',
                           witness=uncovered[0],
                           details=dict(details, uncovered=uncovered[:limit]))
    return Certificate(kind='affine_cover', verdict='pass', details=details)


def one_dim_spectrum_check(S):
    """Checks that a finite orthogonal set of the line lies in λ0 + Z

    On the line, a set is orthogonal exactly when its differences are
    nonzero integers, so it sits inside a translate of the complete
    spectrum Z.

    Parameters
    ----------
        S : list of Vector
            One dimensional points
    Returns
    -------
        certificate : Certificate
            'pass' with the coset offset, 'fail' with a non-integer pair
    """
    points = [as_vector(v) for v in S]
    if not points:
        return Certificate(kind='one_dim_spectrum', verdict='pass',
                           details={'offset': '0'})
    base = points[0][0]
    for point in points[1:]:
        if not (point[0] - base).is_integer():
            return Certificate(kind='one_dim_spectrum', verdict='fail',
                               witness=[points[0], point])
    offset, _ = base.split()
    return Certificate(kind='one_dim_spectrum', verdict='pass',
                       details={'offset': str(offset),
                                'size': len(points)})
