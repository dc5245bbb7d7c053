# -*- coding: utf-8 -*-
"""
orthopack.certificate

Machine-checkable verdicts shared by every checker in orthopack
"""

from orthopack import _orthopackBase
from orthopack.constants import exit_codes
from orthopack.io.json import remove_class

verdicts = ('pass', 'fail', 'undecidable')


class Certificate(_orthopackBase):
    """Verdict of a check together with the data needed to re-check it

    Attributes
    ----------
        kind : str
            Name of the check (e.g. 'pairwise_orthogonal', 'maximal')
        verdict : str
            One of 'pass', 'fail' or 'undecidable'
        witness : object, optional
            Offending pair, extension point or other counterexample.
            Default is None
        details : dict, optional
            Check-specific data such as counts, enclosures or parameters.
            Default is an empty dictionary
        trace : list, optional
            Refutation trace. Each entry names a rule and the family that
            forced it. Default is an empty list
        evidence_only : bool, optional
            If True, the verdict rests on a finite search and is not a
            proof. Default is False
    """

    def __init__(self, kind, verdict, witness=None, details=None, trace=None,
                 evidence_only=False):
        if verdict not in verdicts:
            err_msg = ('Invalid verdict: {}. Accepted verdicts are {}.'
                       ''.format(verdict, ', '.join(verdicts)))
            raise ValueError(err_msg)
        self.kind = kind
        self.verdict = verdict
        self.witness = witness
        self.details = {} if details is None else dict(details)
        self.trace = [] if trace is None else list(trace)
        self.evidence_only = evidence_only

    def __repr__(self):
        return 'Certificate(kind={!r}, verdict={!r})'.format(self.kind,
                                                             self.verdict)

    @property
    def passed(self):
        return self.verdict == 'pass'

    @property
    def failed(self):
        return self.verdict == 'fail'

    @property
    def exit_code(self):
        """Exit code of the command line interface for this verdict"""
        return exit_codes[self.verdict]

    @classmethod
    def from_bool(cls, kind, result, witness=None, **kwargs):
        """Wraps a boolean decision

        Parameters
        ----------
            kind : str
                Name of the check
            result : bool
                True for 'pass', False for 'fail'
            witness : object, optional
                Recorded only for a failing result
            kwargs : keyword arguments
                Passed to the constructor
        Returns
        -------
            certificate : Certificate
        """
        if result:
            return cls(kind=kind, verdict='pass', **kwargs)
        return cls(kind=kind, verdict='fail', witness=witness, **kwargs)

    @classmethod
    def undecidable(cls, kind, reason, **kwargs):
        details = dict(kwargs.pop('details', {}) or {})
        details['reason'] = str(reason)
        return cls(kind=kind, verdict='undecidable', details=details, **kwargs)

    def to_dict(self):
        """Represents object as dictionary with JSON-accepted datatypes

        Returns
        -------
            obj_dict : dict
        """
        return {
            'class': str(self.__class__),
            'kind': self.kind,
            'verdict': self.verdict,
            'witness': self.witness,
            'details': self.details,
            'trace': self.trace,
            'evidence_only': self.evidence_only,
        }

    @classmethod
    def from_dict(cls, json_obj):
        json_obj = remove_class(json_obj)
        return cls(**json_obj)
