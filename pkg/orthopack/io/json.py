# -*- coding: utf-8 -*-
"""
orthopack.io.json

Encoding of orthopack objects to JSON and back
"""
import json
from fractions import Fraction

import numpy as np


class orthopackEncoder(json.JSONEncoder):
    """Encodes orthopack objects to JSON format. The object (and complex
    subobjects) must have the method: to_dict(). Fractions are written as
    ``'p/q'`` strings and sets as sorted lists.
    """
    def default(self, o):
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        try:
            o_dict = o.to_dict()
        except AttributeError:
            return super().default(o)
        else:
            return o_dict


def json_to_orthopack(json_obj):
    """Object hook to convert json to orthopack objects. Any complex object
    should be registered in :func:`~orthopack.io.json.type_to_class`.

    Parameters
    ----------
        json_obj : Type supported by JSON
            JSON object to be converted to orthopack object. If this is a
            complex orthopack object, must have the 'class' entry in the
            dictionary.
    Returns
    -------
        obj : orthopack object
            Parsed orthopack object
    """
    try:
        class_name = type_to_class(json_obj['class'])
    except (KeyError, TypeError):
        return json_obj
    else:
        obj = class_name.from_dict(json_obj)
        return obj


def type_to_class(class_str):
    """Converts between type of object and orthopack classes.

    Parameters
    ----------
        class_str : str
            Output of str(orthopack_obj.__class__)
    Returns
    -------
        class : class
            Class corresponding to class_str
    Raises
    ------
        KeyError
            If class_str is not an orthopack class
    """

    # Imported here since the classes below import this module
    from orthopack.certificate import Certificate
    from orthopack.exactreal import SymbolicReal
    from orthopack.exactreal.witness import SymbolWitness
    from orthopack.cube import Vector, Slab
    from orthopack.constructions.families import (FamilySet, Point,
                                                  LineFamily, PlaneFamily,
                                                  PuncturedLattice,
                                                  HalfPunctured,
                                                  TranslatedLattice,
                                                  ProductFamily)
    from orthopack.constructions.square import SquareSpectrum
    from orthopack.finite import FiniteGroup
    from orthopack.finite.intervals import (IntervalUnion, PeriodicSet,
                                            ComplexEnclosure)
    from orthopack.finite.mask import MaskPolynomial
    from orthopack.io.workspace import Workspace
    from orthopack.io.report import Report

    classes = (Certificate, SymbolicReal, SymbolWitness, Vector, Slab,
               FamilySet, Point, LineFamily, PlaneFamily, PuncturedLattice,
               HalfPunctured, TranslatedLattice, ProductFamily,
               SquareSpectrum, FiniteGroup, MaskPolynomial, IntervalUnion,
               PeriodicSet, ComplexEnclosure, Workspace, Report)
    type_to_class_dict = {str(cls): cls for cls in classes}
    return type_to_class_dict[class_str]


def remove_class(json_obj):
    """Removes unnecessary entries from the JSON object when reinitializing the
    orthopack object

    Parameters
    ----------
        json_obj : dict
            JSON object unnecessary entries
    Returns
    -------
        json_obj : dict
            JSON object without unnecessary entries
    """
    json_obj = dict(json_obj)
    for key in ('class', 'type', 'variant', 'schema', '_id'):
        json_obj.pop(key, None)
    return json_obj


def dumps(obj, **kwargs):
    """Canonical JSON text of an object: sorted keys, two space indent

    Parameters
    ----------
        obj : object
            Object to encode
        kwargs : keyword arguments
            Passed to ``json.dumps``
    Returns
    -------
        text : str
    """
    kwargs.setdefault('indent', 2)
    kwargs.setdefault('sort_keys', True)
    return json.dumps(obj, cls=orthopackEncoder, **kwargs)


def loads(text):
    return json.loads(text, object_hook=json_to_orthopack)


def write_json(obj, filename):
    """Writes an object to a JSON file in canonical form

    Parameters
    ----------
        obj : object
            Object to encode
        filename : str
            Output path
    """
    with open(filename, 'w', encoding='utf-8') as f_ptr:
        f_ptr.write(dumps(obj))
        f_ptr.write('\n')


def read_json(filename):
    """Reads a JSON file and revives orthopack objects

    Parameters
    ----------
        filename : str
            Input path
    Returns
    -------
        obj : object
    """
    with open(filename, 'r', encoding='utf-8') as f_ptr:
        return json.load(f_ptr, object_hook=json_to_orthopack)
