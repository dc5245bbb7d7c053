# -*- coding: utf-8 -*-
"""
orthopack.finite.intervals

Lift of the discrete cube to a union of unit intervals in R, rigorous
enclosures of its Fourier transform, and the maximality certificate of the
lifted orthogonal set.

The union is H = [h, h + 1) over h in phi(H0); its transform factors as

    1_H^(x) = sum_h exp(-2 pi i h x) * (1 - exp(-2 pi i x)) / (2 pi i x)

and the exponential sum equals, with x = xi/N,

    prod_{l in (p, q, r)} sum_{a < l} exp(-2 pi i a xi / l^2)
"""

import logging
import math
from contextlib import contextmanager
from fractions import Fraction
from numbers import Rational

import numpy as np
from mpmath import iv
from mpmath.libmp import to_rational
from more_itertools import consecutive_groups

from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.certificate import Certificate
from orthopack.exceptions import DomainError, Undecidable
from orthopack.finite import (FiniteGroup, discrete_cube, gamma0, lambda0,
                              phi_set, exhaustive_maximality)
from orthopack.finite.mask import MaskPolynomial
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


class IntervalUnion(_orthopackBase):
    """Disjoint union of unit intervals [h, h + 1) with integer h

    Attributes
    ----------
        starts : list of int
            Sorted left endpoints
        period : int, optional
            N. If given, every endpoint lies in [0, N)
    """

    def __init__(self, starts, period=None):
        self.starts = sorted({int(h) for h in starts})
        self.period = None if period is None else int(period)
        if self.period is not None and self.starts:
            if self.starts[0] < 0 or self.starts[-1] >= self.period:
                err_msg = ('Interval endpoints must lie in [0, {}). Received '
                           'starts from {} to {}.'
                           ''.format(self.period, self.starts[0],
                                     self.starts[-1]))
                raise ValueError(err_msg)
        self._mask = None

    def __len__(self):
        return len(self.starts)

    def __repr__(self):
        return 'IntervalUnion({} intervals, period={})'.format(len(self),
                                                               self.period)

    @property
    def intervals(self):
        return [(h, h + 1) for h in self.starts]

    @property
    def measure(self):
        return len(self.starts)

    def merged(self):
        """Maximal runs of adjacent intervals as (start, stop) pairs"""
        merged = []
        for group in consecutive_groups(self.starts):
            group = list(group)
            merged.append((group[0], group[-1] + 1))
        return merged

    def contains(self, x):
        x = Fraction(x)
        return (x.numerator//x.denominator) in set(self.starts)

    def mask(self):
        """Mask polynomial of the left endpoints in Z_N"""
        if self.period is None:
            err_msg = 'A mask polynomial needs the period of the union.'
            raise ValueError(err_msg)
        if self._mask is None:
            self._mask = MaskPolynomial.from_set(self.starts, self.period)
        return self._mask

    def to_dict(self):
        return {'class': str(self.__class__),
                'starts': list(self.starts),
                'period': self.period,
                'intervals': [list(pair) for pair in self.intervals]}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(starts=json_obj['starts'], period=json_obj.get('period'))


class PeriodicSet(_orthopackBase):
    """The set {x/N + n : x in residues, n integer}

    Attributes
    ----------
        residues : list of int
            Sorted residues mod N
        period : int
            N
    """

    def __init__(self, residues, period):
        self.period = int(period)
        self.residues = sorted({int(x) % self.period for x in residues})

    def __len__(self):
        return len(self.residues)

    def __repr__(self):
        return 'PeriodicSet({} residues mod {})'.format(len(self),
                                                        self.period)

    def contains(self, x):
        scaled = Fraction(x)*self.period
        if scaled.denominator != 1:
            return False
        return (scaled.numerator % self.period) in set(self.residues)

    def points(self, lo, hi):
        """Members in [lo, hi), sorted"""
        lo, hi = Fraction(lo), Fraction(hi)
        first = math.floor(lo*self.period)
        last = math.ceil(hi*self.period)
        residues = set(self.residues)
        return [Fraction(k, self.period) for k in range(first, last)
                if k % self.period in residues
                and lo <= Fraction(k, self.period) < hi]

    def to_dict(self):
        return {'class': str(self.__class__),
                'residues': list(self.residues),
                'period': self.period}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(residues=json_obj['residues'],
                   period=json_obj['period'])


class ComplexEnclosure(_orthopackBase):
    """Rectangle [re_lo, re_hi] x [im_lo, im_hi] of the complex plane

    Attributes
    ----------
        re : tuple of Fraction
        im : tuple of Fraction
        exact : bool
            True if the rectangle is a single point found by exact
            arithmetic
    """

    def __init__(self, re, im, exact=False):
        self.re = tuple(Fraction(v) for v in re)
        self.im = tuple(Fraction(v) for v in im)
        self.exact = exact

    @classmethod
    def point(cls, value):
        value = Fraction(value)
        return cls(re=(value, value), im=(0, 0), exact=True)

    @classmethod
    def from_interval(cls, z):
        try:
            re = _fraction_bounds(z.real)
            im = _fraction_bounds(z.imag)
        except ValueError:
            err_msg = 'Enclosure is unbounded.'
            raise Undecidable(err_msg)
        return cls(re=re, im=im)

    def __repr__(self):
        return 'ComplexEnclosure(re={}, im={}, exact={})'.format(
            [str(v) for v in self.re], [str(v) for v in self.im], self.exact)

    @property
    def is_exact_zero(self):
        return self.exact and not any(self.re + self.im)

    def contains_zero(self):
        return (self.re[0] <= 0 <= self.re[1]
                and self.im[0] <= 0 <= self.im[1])

    @property
    def midpoint(self):
        return complex(float(sum(self.re)/2), float(sum(self.im)/2))

    @property
    def width(self):
        return float(max(self.re[1] - self.re[0], self.im[1] - self.im[0]))

    def to_dict(self):
        return {'class': str(self.__class__),
                're': [str(v) for v in self.re],
                'im': [str(v) for v in self.im],
                'exact': self.exact}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(re=json_obj['re'], im=json_obj['im'],
                   exact=json_obj.get('exact', False))


@contextmanager
def _precision(bits):
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def _fraction_bounds(x):
    lo, hi = x._mpi_
    return Fraction(*to_rational(lo)), Fraction(*to_rational(hi))


def _rational_interval(x):
    """Interval enclosure of a Fraction or of a (lo, hi) pair"""
    if isinstance(x, tuple):
        lo, hi = (_rational_interval(v) for v in x)
        return iv.mpf((lo, hi))
    return iv.mpf(x.numerator)/x.denominator


def _unit(t):
    """exp(-2 pi i t) for an interval t"""
    theta = 2*iv.pi*t
    return iv.mpc(iv.cos(theta), -iv.sin(theta))


def _parse_frequency(xi):
    if isinstance(xi, (tuple, list)):
        lo, hi = (Fraction(v) for v in xi)
        if lo > hi:
            err_msg = 'Frequency interval ({}, {}) is empty.'.format(lo, hi)
            raise ValueError(err_msg)
        return (lo, hi) if lo != hi else lo
    if isinstance(xi, (Rational, str, float, int)):
        return Fraction(xi)
    err_msg = 'Frequency must be rational or a rational interval.'
    raise TypeError(err_msg)


def _interval_factor(t):
    """(1 - exp(-2 pi i t)) / (2 pi i t), the transform of [0, 1)"""
    return (iv.mpc(1) - _unit(t))/iv.mpc(0, 2*iv.pi*t)


def ft_interval_union(H, xi, prec=None):
    """Rigorous enclosure of the Fourier transform of 1_H

    Parameters
    ----------
        H : IntervalUnion
        xi : Fraction, int, str, float or tuple
            Frequency, or a (lo, hi) pair enclosing it. Floats are taken at
            their exact binary value
        prec : int, optional
            Working precision in bits. Default is
            ``constants.default('interval_prec')``
    Returns
    -------
        value : ComplexEnclosure
            Exact point at xi = 0 (the measure of H), at nonzero integers
            (zero) and at xi = k/N where the mask polynomial vanishes
            (zero)
    """
    if prec is None:
        prec = c.default('interval_prec')
    xi = _parse_frequency(xi)
    if not isinstance(xi, tuple):
        if xi == 0:
            return ComplexEnclosure.point(H.measure)
        if xi.denominator == 1:
            return ComplexEnclosure.point(0)
        if H.period is not None and (xi*H.period).denominator == 1:
            k = (xi*H.period).numerator % H.period
            if H.mask().vanishes(k):
                return ComplexEnclosure.point(0)
    with _precision(prec):
        if isinstance(xi, tuple):
            t = _rational_interval(xi)
            total = iv.mpc(0)
            for h in H.starts:
                total += _unit(h*t)
        else:
            # phases reduced exactly mod 1
            total = iv.mpc(0)
            for h in H.starts:
                phase = (h*xi) % 1
                total += _unit(_rational_interval(phase))
            t = _rational_interval(xi)
        return ComplexEnclosure.from_interval(total*_interval_factor(t))


def _check_not_integer(xi):
    if not isinstance(xi, tuple) and xi.denominator == 1:
        err_msg = ('The closed form holds for non-integer frequencies only. '
                   'Received {}.'.format(xi))
        raise DomainError(err_msg)
    if isinstance(xi, tuple):
        lo, hi = xi
        if (lo.numerator//lo.denominator) != (hi.numerator//hi.denominator) \
                or lo.denominator == 1:
            err_msg = ('Frequency interval ({}, {}) contains an integer.'
                       ''.format(lo, hi))
            raise DomainError(err_msg)


def closed_form_ft(p, q, r, xi, form='sum', prec=None):
    """Enclosure of the product formula for the transform of phi(H0)

    Evaluates, at x = xi/N,

        prod_{l in (p, q, r)} sum_{a < l} exp(-2 pi i a xi / l^2)

    Parameters
    ----------
        p, q, r : int
            Odd primes with p < q < r
        xi : Fraction, int, str, float or tuple
            Non-integer frequency, or a (lo, hi) pair enclosing it
        form : str, optional
            'sum' evaluates each factor as a geometric sum. 'quotient'
            evaluates it as (1 - exp(-2 pi i xi/l)) / (1 - exp(-2 pi i
            xi/l^2)). Default is 'sum'
        prec : int, optional
            Working precision in bits. Default is
            ``constants.default('interval_prec')``
    Returns
    -------
        value : ComplexEnclosure
    Raises
    ------
        DomainError
            If xi is an integer
        ValueError
            If form is not supported
    """
    if prec is None:
        prec = c.default('interval_prec')
    if form not in ('sum', 'quotient'):
        err_msg = ('Invalid form: {}. Supported forms are "sum" and '
                   '"quotient".'.format(form))
        raise ValueError(err_msg)
    xi = _parse_frequency(xi)
    _check_not_integer(xi)
    with _precision(prec):
        t = _rational_interval(xi)
        value = iv.mpc(1)
        for prime in (p, q, r):
            if form == 'quotient':
                factor = ((iv.mpc(1) - _unit(t/prime))
                          / (iv.mpc(1) - _unit(t/prime**2)))
            elif isinstance(xi, tuple):
                factor = iv.mpc(0)
                for a in range(prime):
                    factor += _unit(a*t/prime**2)
            else:
                factor = iv.mpc(0)
                for a in range(prime):
                    phase = (a*xi/prime**2) % 1
                    factor += _unit(_rational_interval(phase))
            value *= factor
        return ComplexEnclosure.from_interval(value)


def direct_sum_ft(p, q, r, xi, prec=None):
    """Enclosure of sum_{h in phi(H0)} exp(-2 pi i h xi / N)"""
    if prec is None:
        prec = c.default('interval_prec')
    xi = _parse_frequency(xi)
    if isinstance(xi, tuple):
        err_msg = 'direct_sum_ft needs a rational frequency.'
        raise TypeError(err_msg)
    N = (p*q*r)**2
    with _precision(prec):
        total = iv.mpc(0)
        for h in phi_set(p, q, r, discrete_cube(p, q, r)):
            total += _unit(_rational_interval((h*xi/N) % 1))
        return ComplexEnclosure.from_interval(total)


def _split(xi):
    """Integer and fractional parts, both exact for float input"""
    whole = np.floor(xi)
    return whole.astype(np.int64), xi - whole


def closed_form_values(p, q, r, xi):
    """Floating point product formula at an array of frequencies"""
    whole, frac = _split(np.asarray(xi, dtype=float))
    value = np.ones(whole.shape, dtype=complex)
    for prime in (p, q, r):
        modulus = prime**2
        a = np.arange(prime, dtype=np.int64)
        # integer part of the phase reduced exactly mod 1
        phases = ((np.multiply.outer(whole, a) % modulus)/modulus
                  + np.multiply.outer(frac, a)/modulus)
        value *= np.exp(-2j*np.pi*phases).sum(axis=-1)
    return value


def direct_sum_values(p, q, r, xi):
    """Floating point exponential sum over phi(H0) at an array of
    frequencies"""
    whole, frac = _split(np.asarray(xi, dtype=float))
    N = (p*q*r)**2
    h = np.array(phi_set(p, q, r, discrete_cube(p, q, r)), dtype=np.int64)
    phases = ((np.multiply.outer(whole, h) % N)/N
              + np.multiply.outer(frac, h)/N)
    return np.exp(-2j*np.pi*phases).sum(axis=-1)


def lift_to_R(p, q, r):
    """Lifts H0, Lambda0 and Gamma0 to R through phi

    Returns
    -------
        H : IntervalUnion
            Union of [h, h + 1) over h in phi(H0)
        Lambda : PeriodicSet
            phi(Lambda0)/N + Z
        Gamma : PeriodicSet
            phi(Gamma0)/N + Z
    """
    N = (p*q*r)**2
    H = IntervalUnion(phi_set(p, q, r, discrete_cube(p, q, r)), period=N)
    Lambda = PeriodicSet(phi_set(p, q, r, lambda0(p, q, r)), period=N)
    Gamma = PeriodicSet(phi_set(p, q, r, gamma0(p, q, r)), period=N)
    return H, Lambda, Gamma


def _certified_nonzero(evaluate, prec, rounds):
    """Doubles the precision until the enclosure excludes 0

    Returns
    -------
        value : ComplexEnclosure or None
            None if the enclosure is an exact zero
    Raises
    ------
        Undecidable
            If 0 stays inside after all rounds
    """
    for _ in range(rounds + 1):
        value = evaluate(prec)
        if value.is_exact_zero:
            return None
        if not value.contains_zero():
            return value
        prec *= 2
    err_msg = ('Enclosure still contains 0 at {} bits of precision.'
               ''.format(prec//2))
    raise Undecidable(err_msg)


def _draw_off_integers(rng, N, samples, margin):
    draws = np.empty(0)
    while len(draws) < samples:
        xi = rng.uniform(0, N, size=samples)
        keep = np.abs(xi - np.rint(xi)) >= margin
        draws = np.concatenate([draws, xi[keep]])
    return draws[:samples]


def few_zeros_sampling(p, q, r, samples=None, seed=None, margin=1e-4,
                       agreement=1e-9, tolerance=1e-9, prec=None,
                       rounds=None):
    """Property test of the product formula away from the integers

    Draws xi uniformly in (0, N), at least ``margin`` from every integer,
    and checks that the product formula matches the direct exponential sum
    and does not vanish. Values below ``tolerance`` are recomputed with
    interval arithmetic.

    Parameters
    ----------
        p, q, r : int
            Odd primes with p < q < r
        samples : int, optional
            Default is ``constants.default('samples')``
        seed : int, optional
            Default is ``constants.default('seed')``
        margin : float, optional
            Minimum distance to the integers. Default is 1e-4
        agreement : float, optional
            Maximum allowed difference of the two forms. Default is 1e-9
        tolerance : float, optional
            Values smaller than this are checked with intervals. Default is
            1e-9
    Returns
    -------
        certificate : Certificate
            Evidence-only
    """
    if samples is None:
        samples = c.default('samples')
    if seed is None:
        seed = c.default('seed')
    if prec is None:
        prec = c.default('interval_prec')
    if rounds is None:
        rounds = c.default('interval_rounds')
    N = (p*q*r)**2
    rng = np.random.default_rng(seed)
    xi = _draw_off_integers(rng, N, samples, margin)
    closed = closed_form_values(p, q, r, xi)
    direct = direct_sum_values(p, q, r, xi)
    difference = np.abs(closed - direct)
    small = np.flatnonzero(np.abs(closed) < tolerance)
    for index in small:
        sample = Fraction(float(xi[index]))
        value = _certified_nonzero(
            lambda bits: closed_form_ft(p, q, r, sample, prec=bits),
            prec, rounds)
        if value is None:
            return Certificate(kind='few_zeros', verdict='fail',
                               witness=str(sample),
                               details={'samples': samples, 'seed': seed},
                               evidence_only=True)
    details = {'samples': samples,
               'seed': seed,
               'max_difference': float(difference.max()),
               'min_abs': float(np.abs(closed).min()),
               'refined': int(len(small))}
    verdict = 'pass' if details['max_difference'] < agreement else 'fail'
    logger.info('Sampled %d frequencies; max difference %.3e, min |value| '
                '%.3e', samples, details['max_difference'],
                details['min_abs'])
    return Certificate(kind='few_zeros', verdict=verdict, details=details,
                       evidence_only=True)


def _rational_sample_values(p, q, r, D, j):
    """Product formula at x = j/D with phases reduced exactly"""
    N = (p*q*r)**2
    value = np.ones(len(j), dtype=complex)
    for prime in (p, q, r):
        modulus = D*prime*prime
        base = (N*j) % modulus
        a = np.arange(prime, dtype=np.int64)
        phases = (np.multiply.outer(base, a) % modulus)/modulus
        value *= np.exp(-2j*np.pi*phases).sum(axis=-1)
    return value


def lifted_maximality(p, q, r, denominators=None, samples=None, seed=None,
                      margin=1e-9, bound=None, prec=None, rounds=None,
                      chunk=2**16):
    """Certificate that phi(Lambda0)/N + Z is maximal orthogonal for H

    The certificate has three parts:

    - 'exhaustive': Lambda0' = phi(Lambda0) is maximal in Z_N for the
      zeros of the mask polynomial of phi(H0). This covers every x = k/N.
    - 'rational': for x = j/D in [0, 1), D in ``denominators`` and x not
      in (1/N)Z, the transform of 1_H does not vanish at x, so x cannot
      extend the set (it contains 0).
    - 'irrational': evidence from :func:`few_zeros_sampling`. Skipped if
      samples is 0.

    Parameters
    ----------
        p, q, r : int
            Odd primes with p < q < r
        denominators : iterable of int, optional
            Trial denominators, must include N. Default is (N, 2N, 3N, 7N)
        samples : int, optional
            Draws of the irrational evidence part. Default is
            ``constants.default('samples')``
        seed : int, optional
            Seed of the irrational evidence part
        margin : float, optional
            Floating point values above this are accepted as nonzero; the
            rest are decided with intervals. Default is 1e-9
        bound : int, optional
            Bound of the exhaustive scan
    Returns
    -------
        certificate : Certificate
    Raises
    ------
        ValueError
            If N is not among the denominators
        Undecidable
            If an enclosure keeps containing 0
    """
    if prec is None:
        prec = c.default('interval_prec')
    if rounds is None:
        rounds = c.default('interval_rounds')
    N = (p*q*r)**2
    if denominators is None:
        denominators = (N, 2*N, 3*N, 7*N)
    denominators = sorted({int(D) for D in denominators})
    if N not in denominators or denominators[0] < 1:
        err_msg = ('Denominators must be positive and include N = {}. '
                   'Received {}.'.format(N, denominators))
        raise ValueError(err_msg)

    H, Lambda, _ = lift_to_R(p, q, r)
    exhaustive = exhaustive_maximality([(x,) for x in Lambda.residues],
                                       H.mask().zero_mask(),
                                       FiniteGroup((N,)), bound=bound)

    checked = excluded = refined = 0
    for D in denominators:
        for start in range(0, D, chunk):
            j = np.arange(start, min(start + chunk, D), dtype=np.int64)
            on_grid = (N*j) % D == 0
            excluded += int(on_grid.sum())
            j = j[~on_grid]
            checked += len(j)
            values = _rational_sample_values(p, q, r, D, j)
            for index in np.flatnonzero(np.abs(values) <= margin):
                x = Fraction(int(j[index]), D)
                refined += 1
                value = _certified_nonzero(
                    lambda bits: ft_interval_union(H, x, prec=bits),
                    prec, rounds)
                if value is None:
                    return Certificate(
                        kind='lifted_maximal', verdict='fail',
                        witness=str(x),
                        details={'exhaustive': exhaustive,
                                 'denominators': denominators})
    rational = {'denominators': denominators, 'checked': checked,
                'excluded': excluded, 'refined': refined}
    logger.info('Checked %d rational points off (1/N)Z, %d refined',
                checked, refined)

    details = {'exhaustive': exhaustive, 'rational': rational,
               'size': len(Lambda), 'measure': H.measure}
    if samples is None or samples > 0:
        details['irrational'] = few_zeros_sampling(p, q, r, samples=samples,
                                                   seed=seed, prec=prec,
                                                   rounds=rounds)
    if not exhaustive.passed:
        return Certificate(kind='lifted_maximal', verdict='fail',
                           witness=exhaustive.witness, details=details)
    return Certificate(kind='lifted_maximal', verdict='pass',
                       details=details)
