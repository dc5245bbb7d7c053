# -*- coding: utf-8 -*-
"""
orthopack.io

Reading and writing orthopack artifacts: JSON sets and certificates, YAML
workspaces and rendered reports.
"""

import hashlib

import orthopack


def _get_file_stamp(comment_char=''):
    """Comment line naming the orthopack version that wrote a file

    Parameters
    ----------
        comment_char : str, optional
            Comment character used by the output format. Default is ''
    Returns
    -------
        file_stamp : str
    """
    return '{}File generated by orthopack (v {})'.format(comment_char,
                                                         orthopack.__version__)


def _get_file_digest(filename, block_size=2**16):
    """sha256 hex digest of a file's bytes"""
    digest = hashlib.sha256()
    with open(filename, 'rb') as f_ptr:
        for block in iter(lambda: f_ptr.read(block_size), b''):
            digest.update(block)
    return digest.hexdigest()
