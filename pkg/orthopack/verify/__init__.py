# -*- coding: utf-8 -*-
"""
orthopack.verify

Exact maximality decisions for FamilySets.

A point s extends a set F when s - λ lies in the zero set G for every
member λ. For each supported family this condition is equivalent to a
disjunction of clauses, and each clause is a conjunction of per-coordinate
atoms of two kinds:

- shift(c, t): s_c - t is a nonzero integer
- equal(c, t): s_c = t

Each coordinate of a partial candidate is Free, Pinned to a value, or an
IntegerCoset t + Z with finitely many excluded values, and the atoms keep
that shape. A depth first search over clause choices therefore decides
exactly whether some s extends F.
"""

import logging
from warnings import warn

from orthopack import _orthopackBase
from orthopack import constants as c
from orthopack.certificate import Certificate
from orthopack.cube import Vector, orthogonal
from orthopack.exactreal import SymbolicReal
from orthopack.exceptions import BranchLimit, Inconsistent, UnsupportedFamily
from orthopack.constructions.families import (Point, LineFamily, PlaneFamily,
                                              PuncturedLattice, HalfPunctured,
                                              TranslatedLattice, ProductFamily)

logger = logging.getLogger(__name__)


class Free(_orthopackBase):
    """Coordinate with no constraint yet"""

    def __repr__(self):
        return 'Free()'

    def to_dict(self):
        return {'domain': 'free'}


class Pinned(_orthopackBase):
    """Coordinate fixed to a single value

    Attributes
    ----------
        value : SymbolicReal
    """

    def __init__(self, value):
        self.value = SymbolicReal.coerce(value)

    def __repr__(self):
        return 'Pinned({})'.format(self.value)

    def to_dict(self):
        return {'domain': 'pinned', 'value': self.value.to_dict()}


class IntegerCoset(_orthopackBase):
    """Coordinate ranging over offset + Z minus finitely many values

    Attributes
    ----------
        offset : SymbolicReal
        excluded : frozenset of SymbolicReal
    """

    def __init__(self, offset, excluded=()):
        self.offset = SymbolicReal.coerce(offset)
        self.excluded = frozenset(SymbolicReal.coerce(x) for x in excluded)

    def __repr__(self):
        return 'IntegerCoset({}, excluded={})'.format(
            self.offset, sorted(self.excluded, key=SymbolicReal.sort_key))

    def holds(self, value):
        return self.offset.same_class(value) and value not in self.excluded

    def representative(self):
        """Member closest to the offset, trying offset, +1, -1, +2, ..."""
        step = 0
        while True:
            for shift in ((step, -step) if step else (0,)):
                value = self.offset + shift
                if value not in self.excluded:
                    return value
            step += 1

    def to_dict(self):
        return {'domain': 'coset', 'offset': self.offset.to_dict(),
                'excluded': [x.to_dict() for x in
                             sorted(self.excluded, key=SymbolicReal.sort_key)]}


_free = Free()


class Atom:
    """Constraint on one coordinate of an extension

    Attributes
    ----------
        kind : str
            'shift' for s_axis - target in Z minus {0}, 'equal' for
            s_axis = target
        axis : int
        target : SymbolicReal
    """

    __slots__ = ('kind', 'axis', 'target')

    def __init__(self, kind, axis, target):
        self.kind = kind
        self.axis = axis
        self.target = SymbolicReal.coerce(target)

    def shifted(self, offset):
        return Atom(self.kind, self.axis + offset, self.target)

    def __repr__(self):
        if self.kind == 'shift':
            return 's[{}]-({}) in Z\\0'.format(self.axis, self.target)
        return 's[{}]=({})'.format(self.axis, self.target)

    def entailed_by(self, domain):
        if isinstance(domain, Pinned):
            if self.kind == 'equal':
                return domain.value == self.target
            return (domain.value - self.target).is_nonzero_integer()
        if isinstance(domain, IntegerCoset) and self.kind == 'shift':
            return (domain.offset.same_class(self.target)
                    and self.target in domain.excluded)
        return False

    def apply(self, domain):
        """Narrows a domain, returning None if nothing is left"""
        if isinstance(domain, Free):
            if self.kind == 'equal':
                return Pinned(self.target)
            return IntegerCoset(self.target, [self.target])
        if isinstance(domain, Pinned):
            return domain if self.entailed_by(domain) else None
        # IntegerCoset
        if not domain.offset.same_class(self.target):
            return None
        if self.kind == 'equal':
            if self.target in domain.excluded:
                return None
            return Pinned(self.target)
        return IntegerCoset(domain.offset, domain.excluded | {self.target})


class ExtensionCandidate(_orthopackBase):
    """Partially constrained extension point

    Attributes
    ----------
        domains : tuple
            One Free, Pinned or IntegerCoset per coordinate
    """

    def __init__(self, domains):
        self.domains = tuple(domains)

    @classmethod
    def free(cls, d):
        return cls([_free]*d)

    @classmethod
    def pinned(cls, v):
        return cls([Pinned(x) for x in v])

    @property
    def d(self):
        return len(self.domains)

    def is_pinned(self):
        return all(isinstance(domain, Pinned) for domain in self.domains)

    def entails(self, clause):
        return all(atom.entailed_by(self.domains[atom.axis])
                   for atom in clause)

    def refine(self, clause):
        """Candidate narrowed by every atom of a clause, or None"""
        domains = list(self.domains)
        for atom in clause:
            domain = atom.apply(domains[atom.axis])
            if domain is None:
                return None
            domains[atom.axis] = domain
        return ExtensionCandidate(domains)

    def representative(self):
        """A concrete point of the candidate"""
        coords = []
        for domain in self.domains:
            if isinstance(domain, Pinned):
                coords.append(domain.value)
            elif isinstance(domain, IntegerCoset):
                coords.append(domain.representative())
            else:
                coords.append(SymbolicReal(0))
        return Vector(coords)

    def __eq__(self, other):
        return (isinstance(other, ExtensionCandidate)
                and self.to_dict() == other.to_dict())

    def __hash__(self):
        return hash(repr(self.domains))

    def __repr__(self):
        return 'ExtensionCandidate({})'.format(list(self.domains))

    def to_dict(self):
        return {'domains': [domain.to_dict() for domain in self.domains]}


def _point_rule(base, skip=()):
    return [(Atom('shift', axis, x),) for axis, x in enumerate(base)
            if axis not in skip]


def family_rule(family):
    """Clauses whose disjunction is equivalent to "s extends the family"

    Parameters
    ----------
        family : Family
    Returns
    -------
        clauses : list of tuple of Atom
            An empty list means no point extends the family
    Raises
    ------
        UnsupportedFamily
            If no exact rule is known for the family
    """
    if isinstance(family, Point):
        return _point_rule(family.base)
    if isinstance(family, LineFamily):
        clauses = _point_rule(family.base, skip=(family.axis,))
        clauses.append((Atom('equal', family.axis,
                             family.base[family.axis]),))
        return clauses
    if isinstance(family, PlaneFamily):
        axes = (family.axis_i, family.axis_j)
        clauses = _point_rule(family.base, skip=axes)
        clauses.extend((Atom('equal', axis, family.base[axis]),)
                       for axis in axes)
        return clauses
    if isinstance(family, PuncturedLattice):
        if family.d != 3 or not family.all_dims:
            err_msg = ('No exact rule for {!r}. Only the punctured lattice '
                       'of Z^3 with every coordinate nonzero is supported.'
                       ''.format(family))
            raise UnsupportedFamily(err_msg)
        # Some coordinate of s must vanish
        return [(Atom('equal', axis, 0),) for axis in range(3)]
    if isinstance(family, HalfPunctured):
        # The q block of s must vanish entirely
        return [tuple(Atom('equal', axis, 0)
                      for axis in range(family.n, family.d))]
    if isinstance(family, TranslatedLattice):
        return []
    if isinstance(family, ProductFamily):
        left = family_rule(family.left)
        right = family_rule(family.right)
        shift = family.left.d
        return left + [tuple(atom.shifted(shift) for atom in clause)
                       for clause in right]
    err_msg = 'No exact rule for family {!r}.'.format(family)
    raise UnsupportedFamily(err_msg)


def family_constraint(family, candidate):
    """Refines a candidate by the condition of extending one family

    Parameters
    ----------
        family : Family
        candidate : ExtensionCandidate
    Returns
    -------
        refined : list of ExtensionCandidate
            Every way the condition can hold inside the candidate. An empty
            list means the family refutes the candidate; the unchanged
            candidate alone means the condition already holds.
    Raises
    ------
        DimensionMismatch
            If the candidate and family dimensions differ
        UnsupportedFamily
            If no exact rule is known for the family
    """
    from orthopack import _check_dimension
    _check_dimension(family.d, candidate.d, what='candidate')
    return _refinements(family_rule(family), candidate)


def _refinements(clauses, candidate):
    if any(candidate.entails(clause) for clause in clauses):
        return [candidate]
    refined = []
    for clause in clauses:
        child = candidate.refine(clause)
        if child is not None and child not in refined:
            refined.append(child)
    return refined


def _tier(family):
    if isinstance(family, Point):
        return 0
    if isinstance(family, (PuncturedLattice, HalfPunctured)):
        return 1
    return 2


def _revalidate(F, s, window, kmax):
    """Checks an extension against the family set and a truncation"""
    if F.contains(s):
        err_msg = 'Extension {} is already a member of {!r}.'.format(s, F)
        raise Inconsistent(err_msg)
    for member in F.truncate(window, kmax):
        if not orthogonal(s, member):
            err_msg = ('Extension {} is not orthogonal to member {}.'
                       ''.format(s, member))
            raise Inconsistent(err_msg)


def is_maximal(F, branch_limit=None, fallback=False, trace_limit=1000,
               revalidate_kmax=10):
    """Decides whether F is a maximal orthogonal set

    Parameters
    ----------
        F : FamilySet
        branch_limit : int, optional
            Maximum number of search nodes. Default is
            ``constants.default('branch_limit')``
        fallback : bool, optional
            If True, sets with unsupported families are handed to
            :func:`~orthopack.verify.discrete.discretized_extension_search`
            and the verdict is marked evidence-only. Default is False
        trace_limit : int, optional
            Maximum number of trace entries kept. Default is 1000
        revalidate_kmax : int, optional
            Truncation used to re-check a found extension. Default is 10
    Returns
    -------
        certificate : Certificate
            'pass' when every branch is refuted; 'fail' with an extension
            point as witness otherwise
    Raises
    ------
        UnsupportedFamily
            If a family has no exact rule and ``fallback`` is False
        BranchLimit
            If the search needs more than ``branch_limit`` nodes
    """
    if branch_limit is None:
        branch_limit = c.default('branch_limit')
    try:
        rules = [family_rule(family) for family in F.families]
    except UnsupportedFamily as error:
        if not fallback:
            raise
        warn_msg = ('{} Falling back to a discretized search; the verdict '
                    'is evidence only.'.format(error))
        warn(warn_msg, RuntimeWarning)
        from orthopack.verify.discrete import discretized_extension_search
        return discretized_extension_search(F, kind='maximal')

    order = sorted(range(len(F.families)),
                   key=lambda index: (_tier(F.families[index]), index))
    trace = []
    nodes = 0
    stack = [(ExtensionCandidate.free(F.dimension), 0)]
    while stack:
        candidate, depth = stack.pop()
        nodes += 1
        if nodes > branch_limit:
            err_msg = ('Maximality search of {!r} exceeded {} nodes.'
                       ''.format(F, branch_limit))
            raise BranchLimit(err_msg)
        chosen = None
        refuted_by = None
        for index in order:
            options = _refinements(rules[index], candidate)
            if not options:
                refuted_by = index
                break
            if len(options) == 1 and options[0] is candidate:
                continue
            tier = _tier(F.families[index])
            if chosen is None or (tier, len(options)) < chosen[0]:
                chosen = ((tier, len(options)), index, options)
        if refuted_by is not None:
            if len(trace) < trace_limit:
                trace.append({'depth': depth, 'rule': 'refuted',
                              'family': refuted_by,
                              'variant': F.families[refuted_by].variant})
            continue
        if chosen is None:
            s = candidate.representative()
            _revalidate(F, s, window=revalidate_kmax, kmax=revalidate_kmax)
            logger.info('%r extends by %s after %d nodes', F, s, nodes)
            return Certificate(kind='maximal', verdict='fail', witness=s,
                               details={'nodes': nodes, 'name': F.name,
                                        'candidate': candidate.to_dict()},
                               trace=trace)
        _, index, options = chosen
        if len(trace) < trace_limit:
            trace.append({'depth': depth, 'rule': 'branch', 'family': index,
                          'variant': F.families[index].variant,
                          'options': len(options)})
        # Reversed so the first clause is explored first
        for option in reversed(options):
            stack.append((option, depth + 1))
    logger.info('%r is maximal; %d nodes refuted', F, nodes)
    return Certificate(kind='maximal', verdict='pass',
                       details={'nodes': nodes, 'name': F.name,
                                'trace_truncated': len(trace) >= trace_limit},
                       trace=trace)


from orthopack.verify.conditions import (coordinate_shift_check, slab_check,
                                         incompleteness_evidence,
                                         affine_cover_check,
                                         one_dim_spectrum_check)  # noqa: E402
from orthopack.verify.discrete import \
    discretized_extension_search  # noqa: E402
from orthopack.verify.lemma import lemma_two_subgroups_oracle  # noqa: E402
