# -*- coding: utf-8 -*-
"""
orthopack.io.workspace

YAML workspace files holding the dimension, declared symbols with their
witness presets, truncation defaults and the output directory.
"""

import os

import yaml

from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.exactreal.witness import SymbolWitness
from orthopack.io.json import remove_class


class Workspace(_orthopackBase):
    """Settings shared by the commands run on one project

    Attributes
    ----------
        dimension : int, optional
            Dimension d of the sets. Default is 3
        symbols : dict, optional
            Declared symbol names mapped to witness presets (e.g.
            {'alpha': 'sqrt2/2'}). Default declares alpha, beta and gamma
            with :func:`~orthopack.constants.default_witness`
        window : int, optional
            Default truncation window. Default is
            ``constants.default('window')``
        kmax : int, optional
            Default truncation parameter bound. Default is
            ``constants.default('kmax')``
        output_dir : str, optional
            Directory of written artifacts. Default is '.'
        seed : int, optional
            Seed of random samplers. Default is ``constants.default('seed')``
    """

    def __init__(self, dimension=3, symbols=None, window=None, kmax=None,
                 output_dir='.', seed=None):
        if int(dimension) < 1:
            err_msg = ('Workspace dimension must be at least 1. Received {}.'
                       ''.format(dimension))
            raise ValueError(err_msg)
        self.dimension = int(dimension)
        if symbols is None:
            symbols = {name: c.default_witness(name) for name in c.symbols}
        self.symbols = {str(name): str(preset)
                        for name, preset in symbols.items()}
        for preset in self.symbols.values():
            c.parse_preset(preset)
        self.window = c.default('window') if window is None else int(window)
        self.kmax = c.default('kmax') if kmax is None else int(kmax)
        self.output_dir = str(output_dir)
        self.seed = c.default('seed') if seed is None else int(seed)

    def __repr__(self):
        return ('Workspace(dimension={}, symbols={})'
                ''.format(self.dimension, sorted(self.symbols)))

    def witness(self, assignments=None):
        """Witness of the declared symbols

        Parameters
        ----------
            assignments : list of str, optional
                ``name=preset`` overrides, e.g. from ``--witness``
        Returns
        -------
            witness : SymbolWitness
        """
        return SymbolWitness.from_assignments(assignments, base=self.symbols)

    def undeclared(self, F):
        """Symbols of F that the workspace does not declare"""
        return sorted(set(F.symbols()) - set(self.symbols))

    def check_symbols(self, F):
        """Raises ValueError if F uses an undeclared symbol"""
        missing = self.undeclared(F)
        if missing:
            err_msg = ('Set uses undeclared symbols: {}. Declare them in the '
                       'workspace "symbols" section.'
                       ''.format(', '.join(missing)))
            raise ValueError(err_msg)

    def output_path(self, filename):
        """Places a relative filename under the output directory"""
        if os.path.isabs(filename):
            return filename
        return os.path.join(self.output_dir, filename)

    def to_dict(self):
        return {
            'class': str(self.__class__),
            'schema': c.schemas['workspace'],
            'dimension': self.dimension,
            'symbols': dict(self.symbols),
            'window': self.window,
            'kmax': self.kmax,
            'output_dir': self.output_dir,
            'seed': self.seed,
        }

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(**json_obj)

    def to_yaml(self, filename=None,
                yaml_options={'default_flow_style': False, 'indent': 4}):
        """Writes the workspace as YAML

        Parameters
        ----------
            filename : str, optional
                Output file. If not given, the YAML text is returned
            yaml_options : dict, optional
                Options passed to ``yaml.safe_dump``
        Returns
        -------
            yaml_str : str
                Only returned if filename is None
        """
        yaml_dict = self.to_dict()
        yaml_dict.pop('class')
        yaml_str = yaml.safe_dump(yaml_dict, sort_keys=True, **yaml_options)
        if filename is None:
            return yaml_str
        with open(filename, 'w', encoding='utf-8') as f_ptr:
            f_ptr.write(yaml_str)

    @classmethod
    def from_yaml(cls, filename=None, text=None):
        """Reads a workspace from a YAML file or string

        Parameters
        ----------
            filename : str, optional
                YAML file
            text : str, optional
                YAML text, used if filename is not given
        Returns
        -------
            workspace : Workspace
        Raises
        ------
            ValueError
                If the document is not a mapping or has unknown keys
        """
        if filename is not None:
            with open(filename, 'r', encoding='utf-8') as f_ptr:
                yaml_dict = yaml.safe_load(f_ptr)
        else:
            yaml_dict = yaml.safe_load(text or '')
        if yaml_dict is None:
            yaml_dict = {}
        if not isinstance(yaml_dict, dict):
            err_msg = 'Workspace file must hold a mapping of settings.'
            raise ValueError(err_msg)
        allowed = ('dimension', 'symbols', 'window', 'kmax', 'output_dir',
                   'seed', 'schema', 'class')
        unknown = sorted(set(yaml_dict) - set(allowed))
        if unknown:
            err_msg = ('Unknown workspace settings: {}. Accepted settings '
                       'are {}.'.format(', '.join(unknown),
                                        ', '.join(allowed[:6])))
            raise ValueError(err_msg)
        return cls.from_dict(yaml_dict)
