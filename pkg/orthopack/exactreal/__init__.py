# -*- coding: utf-8 -*-
"""
orthopack.exactreal

Exact numbers of the form q + sum(c_i * tau_i) where q is rational, the c_i
are integers and the tau_i are generic symbols (alpha, beta, gamma, ...).

The symbols are treated as rationally independent of each other and of 1,
so a number is an integer only when its symbol part vanishes and its
rational part is integral.
"""

import numbers
from fractions import Fraction

from orthopack import _orthopackBase
from orthopack.io.json import remove_class


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    err_msg = ('Cannot use {!r} of type {} as an exact rational. Pass an '
               'int, Fraction or string such as "3/4".'
               ''.format(value, type(value).__name__))
    raise TypeError(err_msg)


class SymbolicReal(_orthopackBase):
    """Exact number rat + sum(coefficient * symbol)

    Attributes
    ----------
        rat : Fraction
            Rational part. ints and strings such as '3/4' are accepted
        syms : dict, optional
            Symbol name mapped to its integer coefficient. Zero
            coefficients are dropped. Default is no symbols
    """

    __slots__ = ('_rat', '_syms', '_hash')

    def __init__(self, rat=0, syms=None):
        self._rat = _as_fraction(rat)
        items = []
        for name, coefficient in (syms or {}).items():
            if int(coefficient) != coefficient:
                err_msg = ('Symbol coefficients must be integers. Received '
                           '{} for {}.'.format(coefficient, name))
                raise ValueError(err_msg)
            if coefficient != 0:
                items.append((str(name), int(coefficient)))
        self._syms = tuple(sorted(items))
        self._hash = None

    @classmethod
    def symbol(cls, name, coefficient=1):
        """Number made of a single symbol

        Parameters
        ----------
            name : str
                Symbol name (e.g. 'alpha')
            coefficient : int, optional
                Default is 1
        Returns
        -------
            x : SymbolicReal
        """
        return cls(0, {name: coefficient})

    @classmethod
    def coerce(cls, value):
        """Converts ints, Fractions, rational strings and SymbolicReals"""
        if isinstance(value, cls):
            return value
        if isinstance(value, dict):
            return cls.from_dict(value)
        return cls(value)

    @property
    def rat(self):
        return self._rat

    @property
    def syms(self):
        return dict(self._syms)

    @property
    def symbol_part(self):
        """Symbol terms as a sorted tuple of (name, coefficient)"""
        return self._syms

    @property
    def symbols(self):
        """Names of the symbols with a nonzero coefficient"""
        return tuple(name for name, _ in self._syms)

    def coefficient(self, name):
        for sym_name, coefficient in self._syms:
            if sym_name == name:
                return coefficient
        return 0

    def is_rational(self):
        return not self._syms

    def is_integer(self):
        """True iff the symbol part is empty and the rational part is
        integral"""
        return not self._syms and self._rat.denominator == 1

    def is_zero(self):
        return not self._syms and self._rat == 0

    def is_nonzero_integer(self):
        return self.is_integer() and self._rat != 0

    def same_class(self, other):
        """True iff self - other is an integer"""
        other = SymbolicReal.coerce(other)
        return (self._syms == other._syms
                and (self._rat - other._rat).denominator == 1)

    def floor_rat(self):
        """Integer part of the rational part"""
        return self._rat.numerator // self._rat.denominator

    def class_key(self):
        """Key shared exactly by the numbers in self + Z

        Returns
        -------
            key : tuple
                (symbol part, rational part mod 1)
        """
        return (self._syms, self._rat - self.floor_rat())

    def split(self):
        """Splits into the class representative and the integer offset

        Returns
        -------
            representative : SymbolicReal
                Number whose rational part lies in [0, 1)
            offset : int
                Integer such that self = representative + offset
        """
        offset = self.floor_rat()
        return SymbolicReal(self._rat - offset, dict(self._syms)), offset

    def sort_key(self):
        return (self._syms, self._rat)

    def __add__(self, other):
        try:
            other = SymbolicReal.coerce(other)
        except TypeError:
            return NotImplemented
        syms = dict(self._syms)
        for name, coefficient in other._syms:
            syms[name] = syms.get(name, 0) + coefficient
        return SymbolicReal(self._rat + other._rat, syms)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicReal(-self._rat,
                            {name: -coeff for name, coeff in self._syms})

    def __sub__(self, other):
        try:
            other = SymbolicReal.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        # Only rational scalars; products of symbols are not represented
        if isinstance(other, SymbolicReal):
            if not other.is_rational():
                err_msg = ('Products of symbols are not supported: '
                           '({}) * ({})'.format(self, other))
                raise TypeError(err_msg)
            other = other.rat
        try:
            factor = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if self._syms and factor.denominator != 1:
            err_msg = ('Symbol coefficients must stay integral. Cannot scale '
                       '{} by {}.'.format(self, factor))
            raise ValueError(err_msg)
        return SymbolicReal(self._rat * factor,
                            {name: int(coeff * factor)
                             for name, coeff in self._syms})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, SymbolicReal):
            return self._rat == other._rat and self._syms == other._syms
        if isinstance(other, numbers.Rational):
            return not self._syms and self._rat == other
        return False

    def __hash__(self):
        if self._hash is None:
            if self._syms:
                self._hash = hash((self._rat, self._syms))
            else:
                self._hash = hash(self._rat)
        return self._hash

    def __repr__(self):
        return 'SymbolicReal({})'.format(str(self))

    def __str__(self):
        terms = []
        if self._rat != 0 or not self._syms:
            terms.append(str(self._rat))
        for name, coefficient in self._syms:
            if coefficient == 1:
                term = name
            elif coefficient == -1:
                term = '-{}'.format(name)
            else:
                term = '{}*{}'.format(coefficient, name)
            if terms and not term.startswith('-'):
                term = '+' + term
            terms.append(term)
        return ''.join(terms)

    def to_dict(self):
        """Represents object as dictionary with JSON-accepted datatypes

        Returns
        -------
            obj_dict : dict
                'rat' is a reduced 'p/q' string and 'syms' maps symbol
                names to coefficients
        """
        return {
            'class': str(self.__class__),
            'rat': '{}/{}'.format(self._rat.numerator,
                                  self._rat.denominator),
            'syms': dict(self._syms),
        }

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(rat=json_obj['rat'], syms=json_obj.get('syms', {}))


def is_integer(x):
    return SymbolicReal.coerce(x).is_integer()


def is_nonzero_integer(x):
    return SymbolicReal.coerce(x).is_nonzero_integer()


def is_zero(x):
    return SymbolicReal.coerce(x).is_zero()


def symbols_of(values):
    """Sorted names of every symbol occurring in some value

    Parameters
    ----------
        values : iterable of SymbolicReal
    Returns
    -------
        names : tuple of str
    """
    names = set()
    for value in values:
        names.update(SymbolicReal.coerce(value).symbols)
    return tuple(sorted(names))


from orthopack.exactreal.witness import SymbolWitness, compare, \
    compare_abs_lt_one  # noqa: E402
