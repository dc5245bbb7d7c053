# -*- coding: utf-8 -*-
"""
orthopack.io.report

Reports bundle the command that ran, digests of its inputs and the
certificates it produced. They render as text or CSV tables.
"""

import json
import time
from contextlib import contextmanager

import pandas as pd

import orthopack
from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.certificate import Certificate
from orthopack.io import _get_file_digest, _get_file_stamp
from orthopack.io.json import orthopackEncoder, read_json, remove_class


class Report(_orthopackBase):
    """Record of one command

    Attributes
    ----------
        command : list of str
            Echo of the command line
        inputs : dict, optional
            Input file mapped to its sha256 digest
        certificates : dict, optional
            Label mapped to :class:`~orthopack.certificate.Certificate`
        timings : dict, optional
            Label mapped to seconds. Only filled if ``record_timings`` is
            True; timings make reports differ between runs
        seed : int, optional
            Seed of random samplers
        version : str, optional
            orthopack version. Default is the running version
        record_timings : bool, optional
            Default is False
    """

    def __init__(self, command, inputs=None, certificates=None, timings=None,
                 seed=None, version=None, record_timings=False):
        self.command = list(command)
        self.inputs = dict(inputs or {})
        self.certificates = dict(certificates or {})
        self.timings = dict(timings or {})
        self.seed = c.default('seed') if seed is None else seed
        self.version = orthopack.__version__ if version is None else version
        self.record_timings = record_timings or bool(self.timings)

    def __repr__(self):
        return 'Report(command={!r}, certificates={})'.format(
            ' '.join(self.command), sorted(self.certificates))

    def add_input(self, filename):
        """Records the digest of an input file"""
        self.inputs[str(filename)] = _get_file_digest(filename)
        return self.inputs[str(filename)]

    def add(self, label, certificate):
        if label in self.certificates:
            err_msg = 'Report already has a certificate labelled {}.'.format(
                label)
            raise ValueError(err_msg)
        self.certificates[label] = certificate

    @contextmanager
    def timed(self, label):
        """Times the enclosed block if timings are recorded"""
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.record_timings:
                self.timings[label] = round(time.perf_counter() - start, 6)

    @property
    def verdict(self):
        """Worst verdict: 'undecidable' over 'fail' over 'pass'"""
        verdicts = {cert.verdict for cert in self.certificates.values()}
        for verdict in ('undecidable', 'fail'):
            if verdict in verdicts:
                return verdict
        return 'pass'

    @property
    def exit_code(self):
        return c.exit_codes[self.verdict]

    def to_frame(self):
        """One row per certificate

        Returns
        -------
            df : pandas.DataFrame
                Columns label, kind, verdict, evidence_only, witness and
                the scalar entries of the details
        """
        return certificates_frame(self.certificates)

    def render(self, fmt='text'):
        return render(self.certificates, fmt=fmt,
                      header=' '.join(self.command))

    def to_dict(self):
        obj_dict = {
            'class': str(self.__class__),
            'schema': c.schemas['report'],
            'command': list(self.command),
            'inputs': dict(self.inputs),
            'certificates': dict(self.certificates),
            'seed': self.seed,
            'version': self.version,
        }
        if self.record_timings:
            obj_dict['timings'] = dict(self.timings)
        return obj_dict

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(**json_obj)


def _scalar(value):
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return json.dumps(value, cls=orthopackEncoder, sort_keys=True)


def certificates_frame(certificates):
    """Tabulates labelled certificates with pandas

    Parameters
    ----------
        certificates : dict
            Label mapped to Certificate
    Returns
    -------
        df : pandas.DataFrame
    """
    rows = []
    for label, cert in sorted(certificates.items()):
        row = {'label': label,
               'kind': cert.kind,
               'verdict': cert.verdict,
               'evidence_only': cert.evidence_only,
               'witness': _scalar(cert.witness)}
        for key, value in sorted(cert.details.items()):
            if isinstance(value, (bool, int, float, str)):
                row[key] = value
        rows.append(row)
    columns = ['label', 'kind', 'verdict', 'evidence_only', 'witness']
    df = pd.DataFrame(rows)
    if df.empty:
        return pd.DataFrame(columns=columns)
    extra = sorted(set(df.columns) - set(columns))
    return df[columns + extra]


def render(certificates, fmt='text', header=None):
    """Human-readable table of certificates

    Parameters
    ----------
        certificates : dict
            Label mapped to Certificate
        fmt : str, optional
            'text' or 'csv'. Default is 'text'
        header : str, optional
            Echoed command placed above the text table
    Returns
    -------
        out : str
    Raises
    ------
        ValueError
            If fmt is not supported
    """
    df = certificates_frame(certificates)
    if fmt == 'csv':
        return df.to_csv(index=False)
    elif fmt == 'text':
        lines = [_get_file_stamp()]
        if header:
            lines.append(header)
        lines.append(df.to_string(index=False, na_rep=''))
        return '\n'.join(lines) + '\n'
    err_msg = 'Invalid format: {}. Use "text" or "csv".'.format(fmt)
    raise ValueError(err_msg)


def load_certificates(filename):
    """Certificates stored in a JSON artifact

    Parameters
    ----------
        filename : str
            A Report, a single Certificate, a list of Certificates or a
            mapping of labels to Certificates
    Returns
    -------
        certificates : dict
            Label mapped to Certificate
    Raises
    ------
        ValueError
            If the file holds no certificates
    """
    obj = read_json(filename)
    if isinstance(obj, Report):
        return dict(obj.certificates)
    if isinstance(obj, Certificate):
        return {obj.kind: obj}
    if isinstance(obj, list):
        return {'{}[{}]'.format(cert.kind, i): cert
                for i, cert in enumerate(obj)
                if isinstance(cert, Certificate)}
    if isinstance(obj, dict):
        certificates = {label: cert for label, cert in obj.items()
                        if isinstance(cert, Certificate)}
        if certificates:
            return certificates
    err_msg = 'No certificates found in {}.'.format(filename)
    raise ValueError(err_msg)
