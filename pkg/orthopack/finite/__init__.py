# -*- coding: utf-8 -*-
"""
orthopack.finite

Orthogonal sets in finite abelian groups Z_n1 x ... x Z_nk, and the
discrete cube H0 of Z_p^2 x Z_q^2 x Z_r^2 with its spectrum Γ0 and its
maximal but incomplete orthogonal set Λ0.

Frequencies are identified with group elements; two frequencies are
orthogonal for E when the Fourier transform of 1_E vanishes at their
difference.
"""

import itertools
import logging
from math import prod

import numpy as np
from sympy import isprime

from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.certificate import Certificate
from orthopack.exceptions import BoundExceeded
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


class FiniteGroup(_orthopackBase):
    """Product group Z_n1 x ... x Z_nk

    Attributes
    ----------
        moduli : tuple of int
            Orders of the cyclic factors, each at least 2
    """

    def __init__(self, moduli):
        self.moduli = tuple(int(n) for n in moduli)
        if not self.moduli or min(self.moduli) < 2:
            err_msg = ('FiniteGroup needs moduli of at least 2. Received {}.'
                       ''.format(moduli))
            raise ValueError(err_msg)

    @classmethod
    def cube_group(cls, p, q, r):
        return cls((p**2, q**2, r**2))

    @property
    def order(self):
        return prod(self.moduli)

    @property
    def rank(self):
        return len(self.moduli)

    def __repr__(self):
        return 'FiniteGroup({})'.format(self.moduli)

    def reduce(self, x):
        if isinstance(x, (int, np.integer)):
            x = (x,)
        if len(x) != self.rank:
            err_msg = 'Element {} does not belong to {!r}.'.format(x, self)
            raise ValueError(err_msg)
        return tuple(int(a) % n for a, n in zip(x, self.moduli))

    def add(self, x, y):
        return self.reduce([a + b for a, b in zip(x, y)])

    def sub(self, x, y):
        return self.reduce([a - b for a, b in zip(x, y)])

    def elements(self):
        return itertools.product(*(range(n) for n in self.moduli))

    def indicator(self, E):
        """Boolean array of shape ``moduli`` marking the elements of E"""
        array = np.zeros(self.moduli, dtype=bool)
        for x in E:
            array[self.reduce(x)] = True
        return array

    def mask_of(self, zero):
        """Boolean array of a zero set given as a predicate or an array"""
        if callable(zero):
            array = np.zeros(self.moduli, dtype=bool)
            for x in self.elements():
                array[x] = bool(zero(x))
            return array
        array = np.asarray(zero, dtype=bool)
        return array.reshape(self.moduli)

    def to_dict(self):
        return {'class': str(self.__class__), 'moduli': list(self.moduli)}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(moduli=json_obj['moduli'])


def _check_primes(p, q, r):
    for prime in (p, q, r):
        if not isprime(prime) or prime == 2:
            err_msg = ('The construction needs odd primes. Received {}.'
                       ''.format((p, q, r)))
            raise ValueError(err_msg)
    if not p < q < r:
        err_msg = ('The primes must satisfy p < q < r. Received {}.'
                   ''.format((p, q, r)))
        raise ValueError(err_msg)


def phi(p, q, r, a, b, c):
    """Isomorphism Z_p^2 x Z_q^2 x Z_r^2 -> Z_N, N = (pqr)^2

    Returns
    -------
        x : int
            q^2 r^2 a + p^2 r^2 b + p^2 q^2 c reduced mod N
    """
    N = (p*q*r)**2
    return (q*q*r*r*a + p*p*r*r*b + p*p*q*q*c) % N


def phi_inverse(p, q, r, x):
    """Inverse of :func:`phi`

    Returns
    -------
        element : tuple of int
            (a, b, c) with phi(a, b, c) = x
    """
    moduli = (p*p, q*q, r*r)
    weights = (q*q*r*r, p*p*r*r, p*p*q*q)
    return tuple((x*pow(w, -1, n)) % n for w, n in zip(weights, moduli))


def phi_array(p, q, r):
    """phi of every element, as an array of shape (p^2, q^2, r^2)"""
    a, b, cc = np.meshgrid(np.arange(p*p, dtype=np.int64),
                           np.arange(q*q, dtype=np.int64),
                           np.arange(r*r, dtype=np.int64), indexing='ij')
    return (q*q*r*r*a + p*p*r*r*b + p*p*q*q*cc) % (p*q*r)**2


def phi_set(p, q, r, E):
    """Sorted residues phi(E)"""
    return sorted(phi(p, q, r, *x) for x in E)


def discrete_cube(p, q, r):
    """The discrete cube H0 = {(a, b, c) : a < p, b < q, c < r}

    Parameters
    ----------
        p, q, r : int
            Odd primes with p < q < r
    Returns
    -------
        H0 : frozenset of tuple
    Raises
    ------
        ValueError
            If the primes are invalid
    """
    _check_primes(p, q, r)
    return frozenset(itertools.product(range(p), range(q), range(r)))


def ft_zero_set_H0(p, q, r):
    """Zero set of the Fourier transform of 1_H0

    Returns
    -------
        is_zero : function
            Predicate on (u, v, w): true when u is a nonzero multiple of p
            mod p^2, or v of q mod q^2, or w of r mod r^2
    """
    def is_zero(x):
        u, v, w = x
        return ((u % p == 0 and u % (p*p) != 0)
                or (v % q == 0 and v % (q*q) != 0)
                or (w % r == 0 and w % (r*r) != 0))
    return is_zero


def zero_mask_H0(p, q, r):
    """:func:`ft_zero_set_H0` evaluated on every element"""
    u, v, w = np.meshgrid(np.arange(p*p), np.arange(q*q), np.arange(r*r),
                          indexing='ij')
    return (((u % p == 0) & (u != 0)) | ((v % q == 0) & (v != 0))
            | ((w % r == 0) & (w != 0)))


def gamma0(p, q, r):
    """Spectrum {(u, v, w) : p | u, q | v, r | w} of H0"""
    return frozenset(itertools.product(range(0, p*p, p), range(0, q*q, q),
                                       range(0, r*r, r)))


def lambda0(p, q, r):
    """Maximal but incomplete orthogonal set of H0

    Holds (0, 0, 0), (n, 1-k, 1), (1, k, 1-m) and (1-n, 1, m) where n, k
    and m are nonzero multiples of p, q and r.

    Returns
    -------
        Lambda0 : frozenset of tuple
    """
    P, Q, R = p*p, q*q, r*r
    ns = range(p, P, p)
    ks = range(q, Q, q)
    ms = range(r, R, r)
    members = {(0, 0, 0)}
    members.update((n % P, (1 - k) % Q, 1 % R) for n in ns for k in ks)
    members.update((1 % P, k % Q, (1 - m) % R) for k in ks for m in ms)
    members.update(((1 - n) % P, 1 % Q, m % R) for n in ns for m in ms)
    return frozenset(members)


def _shift_masks(zero, G, members):
    """AND of zero rolled to every member: True at s iff s - λ is a zero
    for every λ"""
    ok = np.ones(G.moduli, dtype=bool)
    axes = tuple(range(G.rank))
    for member in members:
        ok &= np.roll(zero, shift=G.reduce(member), axis=axes)
    return ok


def group_pairwise_orthogonal(Lambda, zero, G):
    """Checks that every difference of distinct members is a zero

    Parameters
    ----------
        Lambda : iterable of tuple
        zero : function or np.ndarray
            Zero set predicate or mask
        G : FiniteGroup
    Returns
    -------
        certificate : Certificate
    """
    members = sorted({G.reduce(x) for x in Lambda})
    is_zero = G.mask_of(zero)
    for x, y in itertools.combinations(members, 2):
        if not is_zero[G.sub(x, y)] or not is_zero[G.sub(y, x)]:
            return Certificate(kind='group_orthogonal', verdict='fail',
                               witness=[list(x), list(y)],
                               details={'size': len(members)})
    return Certificate(kind='group_orthogonal', verdict='pass',
                       details={'size': len(members)})


def exhaustive_maximality(Lambda, zero, G, bound=None):
    """Scans the whole group for an element extending Lambda

    Parameters
    ----------
        Lambda : iterable of tuple
        zero : function or np.ndarray
            Zero set predicate or mask
        G : FiniteGroup
        bound : int, optional
            Maximum number of membership tests |G| * |Lambda|. Default is
            ``constants.default('exhaustive_bound')``
    Returns
    -------
        certificate : Certificate
            'pass' if no s outside Lambda has s - λ in the zero set for all
            λ; 'fail' with the smallest such s otherwise
    Raises
    ------
        BoundExceeded
            If the scan needs more than ``bound`` tests
    """
    if bound is None:
        bound = c.default('exhaustive_bound')
    members = sorted({G.reduce(x) for x in Lambda})
    tests = G.order*max(len(members), 1)
    if tests > bound:
        err_msg = ('Exhaustive scan needs {} tests, above the bound of {}.'
                   ''.format(tests, bound))
        raise BoundExceeded(err_msg)
    extends = _shift_masks(G.mask_of(zero), G, members)
    extends &= ~G.indicator(members)
    found = np.argwhere(extends)
    details = {'group': list(G.moduli), 'size': len(members),
               'tests': tests, 'extensions': int(len(found))}
    if len(found):
        witness = [int(a) for a in found[0]]
        logger.info('%d elements extend the set; first is %s', len(found),
                    witness)
        return Certificate(kind='exhaustive_maximal', verdict='fail',
                           witness=witness, details=details)
    return Certificate(kind='exhaustive_maximal', verdict='pass',
                       details=details)


def tiling_check(E, T, G):
    """True iff every element of G is e + t in exactly one way"""
    counts = np.zeros(G.moduli, dtype=np.int64)
    indicator = G.indicator(E).astype(np.int64)
    axes = tuple(range(G.rank))
    for t in {G.reduce(t) for t in T}:
        counts += np.roll(indicator, shift=t, axis=axes)
    return bool(np.all(counts == 1))


def spectrum_check(Gamma, zero, E, G):
    """Checks |Gamma| = |E| and the orthogonality of Gamma

    Returns
    -------
        certificate : Certificate
    """
    members = {G.reduce(x) for x in Gamma}
    size = len({G.reduce(x) for x in E})
    orthogonality = group_pairwise_orthogonal(members, zero, G)
    details = {'size': len(members), 'target_size': size,
               'orthogonal': orthogonality.passed}
    if len(members) != size:
        return Certificate(kind='spectrum', verdict='fail', details=details)
    if not orthogonality.passed:
        return Certificate(kind='spectrum', verdict='fail',
                           witness=orthogonality.witness, details=details)
    return Certificate(kind='spectrum', verdict='pass', details=details)


def greedy_maximal_extension(start, zero, G, target_size, seed=None):
    """Grows an orthogonal set greedily in random order until maximal

    Parameters
    ----------
        start : iterable of tuple
            Orthogonal set to extend
        zero : function or np.ndarray
            Zero set predicate or mask
        G : FiniteGroup
        target_size : int
            Size of a spectrum, |E|
        seed : int, optional
            Default is ``constants.default('seed')``
    Returns
    -------
        members : list of tuple
            The maximal orthogonal set reached
        certificate : Certificate
            Evidence-only. 'pass' if the maximal set is a spectrum
            (has ``target_size`` elements), 'fail' otherwise
    """
    if seed is None:
        seed = c.default('seed')
    rng = np.random.default_rng(seed)
    is_zero = G.mask_of(zero)
    members = sorted({G.reduce(x) for x in start})
    extends = _shift_masks(is_zero, G, members)
    extends &= ~G.indicator(members)
    axes = tuple(range(G.rank))
    order = rng.permutation(G.order)
    for flat in order:
        s = tuple(int(a) for a in np.unravel_index(flat, G.moduli))
        if extends[s]:
            members.append(s)
            extends &= np.roll(is_zero, shift=s, axis=axes)
            extends[s] = False
    members.sort()
    verdict = 'pass' if len(members) == target_size else 'fail'
    certificate = Certificate(kind='greedy_maximal', verdict=verdict,
                              details={'size': len(members),
                                       'target_size': target_size,
                                       'seed': seed},
                              evidence_only=True)
    return members, certificate


def no_overflow_check(p, q, r, verbose=False):
    """Checks that phi(a, b, c) < N for a < p, b < q, c < r as integers

    Parameters
    ----------
        p, q, r : int
            Odd primes with p < q < r
        verbose : bool, optional
            If True, also returns the largest value and the inequality
            chain pqr(qr + pr + pq) < 3pq^2r^2 <= N. Default is False
    Returns
    -------
        holds : bool
        largest : int
            Only returned if verbose is True
        chain : dict
            Only returned if verbose is True
    """
    _check_primes(p, q, r)
    N = (p*q*r)**2
    largest = q*q*r*r*(p - 1) + p*p*r*r*(q - 1) + p*p*q*q*(r - 1)
    holds = largest < N
    if verbose:
        chain = {
            'bound': p*q*r*(q*r + p*r + p*q),
            'middle': p*q*r*3*q*r,
            'N': N,
            'holds': (p*q*r*(q*r + p*r + p*q) < p*q*r*3*q*r <= N),
        }
        return holds, largest, chain
    return holds


from orthopack.finite.mask import MaskPolynomial, mask_vanishes  # noqa: E402
from orthopack.finite.intervals import (IntervalUnion, PeriodicSet,
                                        ComplexEnclosure, lift_to_R,
                                        ft_interval_union, closed_form_ft,
                                        direct_sum_ft, few_zeros_sampling,
                                        lifted_maximality)  # noqa: E402
