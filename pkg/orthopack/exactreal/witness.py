# -*- coding: utf-8 -*-
"""
orthopack.exactreal.witness

Concrete values for the generic symbols, held as refinable enclosures with
rational endpoints, and the magnitude comparisons built on them.
"""

import logging
from fractions import Fraction
from math import isqrt
from warnings import warn

from sympy import factorint

from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.exceptions import Undecidable
from orthopack.io.json import remove_class

logger = logging.getLogger(__name__)


def _squarefree_part(N):
    part = 1
    for prime, power in factorint(N).items():
        if power % 2:
            part *= prime
    return part


class SymbolWitness(_orthopackBase):
    """Assigns every symbol a concrete non-integer value sqrt(N)/M

    Attributes
    ----------
        presets : dict
            Symbol name mapped to a preset such as 'sqrt2/2'. Symbols
            without an entry fall back to
            :func:`~orthopack.constants.default_witness`
        bits : int, optional
            Starting precision of enclosures. Default is
            ``constants.default('refine_bits')``
        depth : int, optional
            Refinement rounds before :class:`~orthopack.exceptions.Undecidable`
            is raised. Each round adds one bit, halving the enclosure width,
            so the default of ``constants.default('refine_depth')`` = 64
            rounds doubles the precision 64 times, from 32 to 96 bits
    """

    def __init__(self, presets=None, bits=None, depth=None):
        self.presets = {}
        self._values = {}
        for name, preset in sorted((presets or {}).items()):
            self.assign(name, preset)
        self.bits = c.default('refine_bits') if bits is None else int(bits)
        self.depth = c.default('refine_depth') if depth is None else int(depth)

    @classmethod
    def default(cls, symbols=c.symbols):
        """Witness with the default presets of the given symbols"""
        return cls({name: c.default_witness(name) for name in symbols})

    @classmethod
    def from_assignments(cls, assignments, base=None):
        """Builds a witness from ``name=preset`` strings

        Parameters
        ----------
            assignments : list of str
                e.g. ['alpha=sqrt2/2', 'beta=sqrt7/7']
            base : dict, optional
                Presets overridden by the assignments
        Returns
        -------
            witness : SymbolWitness
        Raises
        ------
            ValueError
                If an assignment is not of the form name=preset
        """
        presets = dict(base or {})
        for assignment in assignments or []:
            name, sep, preset = assignment.partition('=')
            if not sep or not name.strip() or not preset.strip():
                err_msg = ('Invalid witness assignment: "{}". Use '
                           'name=preset, e.g. alpha=sqrt2/2.'
                           ''.format(assignment))
                raise ValueError(err_msg)
            presets[name.strip()] = preset.strip()
        return cls(presets)

    def assign(self, name, preset):
        N, M = c.parse_preset(preset)
        part = _squarefree_part(N)
        for other_name, (other_N, _) in self._values.items():
            if other_name != name and _squarefree_part(other_N) == part:
                warn_msg = ('Symbols {} and {} both use sqrt({}) multiples; '
                            'their values are rationally dependent and '
                            'comparisons may be undecidable.'
                            ''.format(other_name, name, part))
                warn(warn_msg, UserWarning)
        self.presets[name] = str(preset)
        self._values[name] = (N, M)

    def _value(self, name):
        try:
            return self._values[name]
        except KeyError:
            self.assign(name, c.default_witness(name))
            return self._values[name]

    def covers(self, names):
        for name in names:
            try:
                self._value(name)
            except KeyError:
                return False
        return True

    def symbol_enclosure(self, name, bits=None):
        """Rational enclosure of one symbol

        Parameters
        ----------
            name : str
                Symbol name
            bits : int, optional
                Precision. The enclosure has width 1/(M * 2**bits).
                Default is ``self.bits``
        Returns
        -------
            lo : Fraction
            hi : Fraction
        """
        N, M = self._value(name)
        bits = self.bits if bits is None else bits
        root = isqrt(N * 4**bits)
        return (Fraction(root, M * 2**bits), Fraction(root + 1, M * 2**bits))

    def enclose(self, x, bits=None):
        """Rational enclosure of a SymbolicReal

        Parameters
        ----------
            x : SymbolicReal
            bits : int, optional
                Precision of the symbol enclosures. Default is ``self.bits``
        Returns
        -------
            lo : Fraction
            hi : Fraction
        """
        from orthopack.exactreal import SymbolicReal
        x = SymbolicReal.coerce(x)
        lo = hi = x.rat
        for name, coefficient in x.syms.items():
            sym_lo, sym_hi = self.symbol_enclosure(name, bits=bits)
            if coefficient > 0:
                lo += coefficient*sym_lo
                hi += coefficient*sym_hi
            else:
                lo += coefficient*sym_hi
                hi += coefficient*sym_lo
        return lo, hi

    def evaluate(self, x):
        """Floating point value of a SymbolicReal. Only for display and
        vectorized searches; decisions use :meth:`enclose`."""
        lo, hi = self.enclose(x, bits=60)
        return float((lo + hi)/2)

    def floor(self, x):
        """Exact floor of a SymbolicReal

        Raises
        ------
            Undecidable
                If the value sits on an integer that refinement cannot
                exclude. Refinement adds one bit per round, for
                ``self.depth`` rounds past ``self.bits``
        """
        from orthopack.exactreal import SymbolicReal
        x = SymbolicReal.coerce(x)
        if x.is_rational():
            return x.floor_rat()
        for bits in range(self.bits, self.bits + self.depth + 1):
            lo, hi = self.enclose(x, bits=bits)
            lo_floor = lo.numerator // lo.denominator
            if lo_floor == hi.numerator // hi.denominator:
                return lo_floor
        err_msg = ('Could not locate {} between consecutive integers after {} '
                   'refinements.'.format(x, self.depth))
        raise Undecidable(err_msg)

    def to_dict(self):
        """Represents object as dictionary with JSON-accepted datatypes

        Returns
        -------
            obj_dict : dict
        """
        return {
            'class': str(self.__class__),
            'presets': dict(self.presets),
            'bits': self.bits,
            'depth': self.depth,
        }

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(**json_obj)


def compare(x, y, witness):
    """Sign of x - y under the witness values

    Parameters
    ----------
        x : SymbolicReal
        y : SymbolicReal or rational
        witness : SymbolWitness
    Returns
    -------
        sign : int
            -1, 0 or 1
    Raises
    ------
        Undecidable
            If x - y is not exactly zero and the enclosures still straddle
            zero after ``witness.depth`` refinements. Every refinement adds
            one bit of precision, from ``witness.bits`` up to
            ``witness.bits + witness.depth``
    """
    from orthopack.exactreal import SymbolicReal
    diff = SymbolicReal.coerce(x) - y
    if diff.is_rational():
        return (diff.rat > 0) - (diff.rat < 0)
    for bits in range(witness.bits, witness.bits + witness.depth + 1):
        lo, hi = witness.enclose(diff, bits=bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        logger.debug('Refining %s beyond %d bits', diff, bits)
    err_msg = ('Sign of {} undecided after {} refinements; the witness '
               'values may make it exactly zero.'.format(diff, witness.depth))
    raise Undecidable(err_msg)


def compare_abs_lt_one(x, witness):
    """Decides |x| < 1

    Parameters
    ----------
        x : SymbolicReal
        witness : SymbolWitness
            Must cover the symbols of x
    Returns
    -------
        is_less : bool
    Raises
    ------
        Undecidable
            If the value of x cannot be separated from -1 or 1
    """
    from orthopack.exactreal import SymbolicReal
    x = SymbolicReal.coerce(x)
    if x.is_rational():
        return abs(x.rat) < 1
    return compare(x, 1, witness) < 0 and compare(x, -1, witness) > 0
