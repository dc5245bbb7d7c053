# -*- coding: utf-8 -*-
"""
orthopack

Exact constructions and certificates for maximal orthogonal exponential
sets of the unit cube and of unions of unit intervals.
"""

####
#
# Name and version read by setuptools:
#
name = 'orthopack'
__version__ = '0.3.0'

import inspect
import logging

from orthopack.io.json import remove_class

logging.getLogger(__name__).addHandler(logging.NullHandler())


class _orthopackBase:
    """Parent of the serializable orthopack objects

    Subclasses provide ``to_dict``; equality compares those dictionaries and
    ``from_dict`` feeds a dictionary back to the constructor."""

    def __eq__(self, other):
        try:
            other_dict = other.to_dict()
        except AttributeError:
            return False
        return self.to_dict() == other_dict

    def to_dict(self):
        """Attributes of the object plus its 'class' tag

        Returns
        -------
            obj_dict : dict
        """
        obj_dict = dict(self.__dict__)
        obj_dict['class'] = str(self.__class__)
        return obj_dict

    @classmethod
    def from_dict(cls, json_obj):
        """Builds the object from the output of ``to_dict``

        Parameters
        ----------
            json_obj : dict
        Returns
        -------
            obj : instance of cls
        """
        json_obj = remove_class(json_obj)
        return cls(**json_obj)


def _accepted_settings(fn):
    """Keyword names a builder or check accepts

    Parameters
    ----------
        fn : function or class
            For a class the signature of ``__init__`` is used, without
            ``self``
    Returns
    -------
        names : tuple of str or None
            None if ``fn`` takes ``**kwargs`` and so accepts any setting
    """
    sig = inspect.signature(fn)
    names = []
    for param in sig.parameters.values():
        if param.kind == param.VAR_KEYWORD:
            return None
        if param.kind in (param.POSITIONAL_OR_KEYWORD, param.KEYWORD_ONLY):
            names.append(param.name)
    return tuple(names)


def _call_with_settings(fn, **settings):
    """Calls ``fn`` with the settings it accepts

    Settings that ``fn`` does not name are dropped, so one set of command
    line settings can drive builders and checks with different signatures.
    Settings equal to None are dropped as well, leaving ``fn`` its own
    defaults.

    Parameters
    ----------
        fn : function or class
        **settings
    Returns
    -------
        output : Output of ``fn``
    """
    names = _accepted_settings(fn)
    kwargs = {key: val for key, val in settings.items()
              if val is not None and (names is None or key in names)}
    return fn(**kwargs)


def _as_list(val):
    """Wraps a scalar in a list; strings count as scalars"""
    if isinstance(val, str):
        return [val]
    try:
        return list(val)
    except TypeError:
        return [val]


def _check_dimension(expected, actual, what='vector'):
    """Raises DimensionMismatch if two dimensions differ

    Parameters
    ----------
        expected : int
            Dimension required by the caller
        actual : int
            Dimension of the object passed in
        what : str, optional
            Name of the object for the error message. Default is 'vector'
    Raises
    ------
        DimensionMismatch
    """
    if expected != actual:
        from orthopack.exceptions import DimensionMismatch
        err_msg = ('Expected a {} of dimension {} but received dimension {}.'
                   ''.format(what, expected, actual))
        raise DimensionMismatch(err_msg)
