# -*- coding: utf-8 -*-
"""
orthopack.constants

Default settings and named witness presets used across orthopack
"""

import re
from math import isqrt

#: Symbols of the built-in three dimensional constructions
symbols = ('alpha', 'beta', 'gamma')

#: Exit codes of the command line interface
exit_codes = {
    'pass': 0,
    'fail': 1,
    'undecidable': 2,
    'usage': 64,
    'io': 74,
}

#: Version tags written in the "schema" field of JSON artifacts
schemas = {
    'familyset': 'orthopack.familyset/1',
    'points': 'orthopack.points/1',
    'report': 'orthopack.report/1',
    'workspace': 'orthopack.workspace/1',
    'finite': 'orthopack.finite/1',
}

_preset_pattern = re.compile(r'^sqrt(?P<N>[0-9]+)(?:/(?P<M>[0-9]+))?$')


def default(setting):
    """Default value of a tunable setting

    Parameters
    ----------
        setting : str
            Name of the setting. Supported settings

            ===============  ==============================================  =========
            Setting          Description                                     Value
            ===============  ==============================================  =========
            window           Lattice coordinate bound of truncations         5
            kmax             Family parameter bound of truncations           5
            inner_window     Window of the necessary-condition checks        3
            branch_limit     Node cap of the maximality engine               1000000
            refine_bits      Starting precision (bits) of witness intervals  32
            refine_depth     Refinement rounds before Undecidable            64
            coverage_bits    Precision (bits) of coverage sweeps             40
            interval_prec    Precision (bits) of Fourier enclosures          80
            interval_rounds  Precision doublings before Undecidable          4
            samples          Random draws of Fourier property checks         10000
            exhaustive_bound Membership tests allowed in group scans         10000000
            grid_radius      Integer radius of discretized searches          4
            grid_kmax        Truncation used by discretized searches         6
            primes           Default (p, q, r) of the finite construction    (3, 5, 7)
            seed             Seed of every random sampler                    0
            ===============  ==============================================  =========

    Returns
    -------
        value : int or tuple
            Default value of the setting
    Raises
    ------
        KeyError
            If setting is not supported.
    """
    default_dict = {
        'window': 5,
        'kmax': 5,
        'inner_window': 3,
        'branch_limit': 10**6,
        'refine_bits': 32,
        'refine_depth': 64,
        'coverage_bits': 40,
        'interval_prec': 80,
        'interval_rounds': 4,
        'samples': 10**4,
        'exhaustive_bound': 10**7,
        'grid_radius': 4,
        'grid_kmax': 6,
        'primes': (3, 5, 7),
        'seed': 0,
    }
    try:
        return default_dict[setting]
    except KeyError:
        err_msg = ('Invalid setting: {}. Use help(orthopack.constants.default) '
                   'for accepted settings.'.format(setting))
        raise KeyError(err_msg)


def default_witness(symbol):
    """Preset assigned to a symbol when the user does not choose one

    Parameters
    ----------
        symbol : str
            Name of the symbol. Supported symbols

            ======  ========
            Symbol  Preset
            ======  ========
            alpha   sqrt2/2
            beta    sqrt3/3
            gamma   sqrt5/5
            delta   sqrt7/7
            eps     sqrt11/11
            ======  ========

    Returns
    -------
        preset : str
            Name of the witness preset
    Raises
    ------
        KeyError
            If the symbol has no default witness.
    """
    witness_dict = {
        'alpha': 'sqrt2/2',
        'beta': 'sqrt3/3',
        'gamma': 'sqrt5/5',
        'delta': 'sqrt7/7',
        'eps': 'sqrt11/11',
    }
    try:
        return witness_dict[symbol]
    except KeyError:
        err_msg = ('No default witness for symbol: {}. Use '
                   'help(orthopack.constants.default_witness) for the '
                   'symbols with defaults or pass a preset such as '
                   'sqrt13/13.'.format(symbol))
        raise KeyError(err_msg)


def parse_preset(preset):
    """Splits a named preset ``sqrtN/M`` into its integers

    Parameters
    ----------
        preset : str
            Preset name. ``sqrtN/M`` stands for the value sqrt(N)/M, and
            ``sqrtN`` for sqrt(N). N must not be a perfect square so the
            value is never an integer.
    Returns
    -------
        N : int
            Radicand
        M : int
            Divisor
    Raises
    ------
        ValueError
            If the preset is malformed or N is a perfect square.
    """
    match = _preset_pattern.match(str(preset).strip())
    if match is None:
        err_msg = ('Invalid witness preset: "{}". Presets look like '
                   'sqrt2/2 or sqrt7.'.format(preset))
        raise ValueError(err_msg)
    N = int(match.group('N'))
    M = int(match.group('M') or 1)
    if M == 0:
        err_msg = 'Witness preset "{}" divides by zero.'.format(preset)
        raise ValueError(err_msg)
    if isqrt(N)**2 == N:
        err_msg = ('Witness preset "{}" is rational because {} is a perfect '
                   'square. Symbols need non-integer irrational values.'
                   ''.format(preset, N))
        raise ValueError(err_msg)
    return N, M
