# -*- coding: utf-8 -*-
"""
orthopack.exceptions

Errors raised by orthopack. Each one also derives from the built-in
exception that best describes it so callers may catch either.
"""


class OrthopackError(Exception):
    """Base class of every orthopack error"""


class DimensionMismatch(OrthopackError, ValueError):
    """Two objects that must share a dimension do not"""


class Undecidable(OrthopackError, ArithmeticError):
    """Interval refinement reached its depth cap without a decision"""


class UnsupportedFamily(OrthopackError, NotImplementedError):
    """The maximality engine has no exact rule for a family"""


class UnsupportedProduct(OrthopackError, TypeError):
    """The family algebra cannot express a product"""


class BranchLimit(OrthopackError, RuntimeError):
    """The branch-and-propagate search visited too many nodes"""


class BoundExceeded(OrthopackError, RuntimeError):
    """An exhaustive scan would exceed its configured size"""


class NotOrthogonal(OrthopackError, ValueError):
    """An input required to be an orthogonal set is not"""


class Inconsistent(OrthopackError, RuntimeError):
    """An internal dichotomy was violated. Always a bug."""


class DomainError(OrthopackError, ValueError):
    """A formula was evaluated outside the set where it is defined"""


class UsageError(OrthopackError, ValueError):
    """Invalid command line usage"""
