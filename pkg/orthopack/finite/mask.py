# -*- coding: utf-8 -*-
"""
orthopack.finite.mask

Mask polynomials of subsets of Z_N and exact tests for the vanishing of
their Fourier transform. For E in Z_N the transform

    1_E^(k) = sum_{e in E} exp(-2 pi i e k / N)

is the mask polynomial P_E(x) = sum_{e in E} x^e at a primitive root of
unity of order d = N / gcd(N, k), so it vanishes iff the cyclotomic
polynomial of order d divides P_E.
"""

import logging
from math import gcd

import numpy as np
from sympy import Poly, cyclotomic_poly, primefactors, symbols

from orthopack import _orthopackBase
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


class MaskPolynomial(_orthopackBase):
    """Integer polynomial of degree below N, stored by coefficients

    Attributes
    ----------
        coefficients : (N,) np.ndarray of int
            Coefficient of x^j at index j
    """

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=np.int64).ravel()
        if len(self.coefficients) < 1:
            raise ValueError('MaskPolynomial needs at least one coefficient.')
        self._vanishing = {}

    @classmethod
    def from_set(cls, E, N):
        """Indicator mask polynomial of E reduced mod N"""
        coefficients = np.zeros(N, dtype=np.int64)
        for e in E:
            coefficients[int(e) % N] = 1
        return cls(coefficients)

    @property
    def N(self):
        return len(self.coefficients)

    @property
    def support(self):
        return [int(j) for j in np.flatnonzero(self.coefficients)]

    def __repr__(self):
        return 'MaskPolynomial(N={}, support={})'.format(self.N,
                                                         len(self.support))

    def vanishes(self, k):
        return mask_vanishes(self, k)

    def vanishes_at_order(self, d):
        """True iff the cyclotomic polynomial of order d divides P"""
        try:
            return self._vanishing[d]
        except KeyError:
            pass
        if d == 1:
            result = int(self.coefficients.sum()) == 0
        else:
            # P mod x^d - 1, then multiply by x^(d/p) - 1 for every prime
            # p | d; what is left is a multiple of x^d - 1 iff Φ_d | P
            folded = np.zeros(d, dtype=np.int64)
            np.add.at(folded, np.arange(self.N) % d, self.coefficients)
            for p in primefactors(d):
                folded = np.roll(folded, d//p) - folded
            result = not folded.any()
        self._vanishing[d] = result
        return result

    def zero_mask(self):
        """Boolean array over Z_N, True where the transform vanishes"""
        orders = self.N//np.gcd(np.arange(self.N), self.N)
        mask = np.zeros(self.N, dtype=bool)
        for d in np.unique(orders):
            mask[orders == d] = self.vanishes_at_order(int(d))
        return mask

    def dft(self):
        """Floating point transform, 1_E^(k) for every k"""
        return np.fft.fft(self.coefficients)

    def dft_agreement(self, threshold=1e-6):
        """Compares :meth:`zero_mask` with the floating point transform

        Returns
        -------
            mismatches : list of int
                Residues where |dft| < threshold disagrees with the exact
                test
        """
        numeric = np.abs(self.dft()) < threshold
        return [int(k) for k in np.flatnonzero(numeric != self.zero_mask())]

    def to_dict(self):
        return {'class': str(self.__class__),
                'coefficients': [int(a) for a in self.coefficients]}

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(coefficients=json_obj['coefficients'])


def mask_vanishes(P, k):
    """Exact test for 1_E^(k) = 0

    Parameters
    ----------
        P : MaskPolynomial
        k : int
            Residue with 0 <= k < N
    Returns
    -------
        vanishes : bool
            True iff the cyclotomic polynomial of order N/gcd(N, k) divides
            P. For k = 0 this is a zero coefficient sum
    """
    k = int(k)
    if not 0 <= k < P.N:
        err_msg = ('Residue {} is outside of [0, {}).'.format(k, P.N))
        raise ValueError(err_msg)
    return P.vanishes_at_order(P.N//gcd(P.N, k))


def mask_vanishes_division(P, k):
    """Same as :func:`mask_vanishes` by polynomial division in sympy

    Slow. Serves as an independent check on small N.
    """
    x = symbols('x')
    d = P.N//gcd(P.N, int(k))
    poly = Poly([int(a) for a in P.coefficients[::-1]], x)
    return poly.rem(Poly(cyclotomic_poly(d, x), x)).is_zero
