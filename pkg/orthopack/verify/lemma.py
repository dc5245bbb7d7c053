# -*- coding: utf-8 -*-
"""
orthopack.verify.lemma

Randomized oracle for the two-subgroup dichotomy: if X - X lies in the
union of two subgroups H1 and H2 of a finite abelian group, it lies in one
of them.
"""

import itertools
import logging

import numpy as np

from orthopack import constants as c
from orthopack.certificate import Certificate

logger = logging.getLogger(__name__)


class _ProductGroup:
    """Z_n1 x Z_n2 with elements numbered a*n2 + b"""

    def __init__(self, moduli):
        if len(moduli) != 2 or min(moduli) < 1:
            err_msg = ('The oracle needs two positive moduli. Received {}.'
                       ''.format(moduli))
            raise ValueError(err_msg)
        self.n1, self.n2 = (int(n) for n in moduli)
        self.order = self.n1*self.n2
        index = np.arange(self.order)
        a, b = np.divmod(index, self.n2)
        self.sub = ((a[:, None] - a[None, :]) % self.n1)*self.n2 \
            + (b[:, None] - b[None, :]) % self.n2
        self.add = ((a[:, None] + a[None, :]) % self.n1)*self.n2 \
            + (b[:, None] + b[None, :]) % self.n2

    def element(self, index):
        return divmod(int(index), self.n2)

    def encode(self, x):
        return (x[0] % self.n1)*self.n2 + x[1] % self.n2

    def cyclic(self, g):
        members = {0}
        current = g
        while current != 0:
            members.add(current)
            current = int(self.add[current, g])
        return frozenset(members)

    def subgroups(self):
        """Every subgroup, as the sums of pairs of cyclic subgroups"""
        cyclic = {self.cyclic(g) for g in range(self.order)}
        found = set()
        for A, B in itertools.product(cyclic, repeat=2):
            idx_a = np.fromiter(A, dtype=np.int64)
            idx_b = np.fromiter(B, dtype=np.int64)
            found.add(frozenset(np.unique(self.add[np.ix_(idx_a, idx_b)])
                                .tolist()))
        return sorted(found, key=lambda H: (len(H), sorted(H)))

    def mask(self, members):
        mask = np.zeros(self.order, dtype=bool)
        mask[list(members)] = True
        return mask


def two_subgroups_dichotomy(X, H1, H2, moduli):
    """Checks the dichotomy for one set

    Parameters
    ----------
        X : iterable of (int, int)
            Elements of Z_n1 x Z_n2
        H1, H2 : iterable of (int, int)
            Subgroups
        moduli : tuple of int
            (n1, n2)
    Returns
    -------
        holds : bool
            True if X - X is outside H1 ∪ H2, or inside H1, or inside H2
    """
    group = _ProductGroup(moduli)
    idx = np.array(sorted({group.encode(x) for x in X}), dtype=np.int64)
    if idx.size == 0:
        return True
    diffs = group.sub[np.ix_(idx, idx)].ravel()
    in_1 = group.mask(group.encode(h) for h in H1)[diffs]
    in_2 = group.mask(group.encode(h) for h in H2)[diffs]
    if not np.all(in_1 | in_2):
        return True
    return bool(np.all(in_1) or np.all(in_2))


def lemma_two_subgroups_oracle(moduli=(6, 6), trials=1000, seed=None,
                               proposals=None):
    """Random search for a counterexample to the two-subgroup dichotomy

    Each trial picks two subgroups H1, H2 and grows X by rejection
    sampling, keeping a proposed element only if X - X stays inside
    H1 ∪ H2. The dichotomy is then asserted for X.

    Parameters
    ----------
        moduli : tuple of int, optional
            (n1, n2) of the group Z_n1 x Z_n2. Default is (6, 6)
        trials : int, optional
            Default is 1000
        seed : int, optional
            Default is ``constants.default('seed')``
        proposals : int, optional
            Proposed elements per trial. Default is twice the group order
    Returns
    -------
        certificate : Certificate
            'pass' if every trial satisfies the dichotomy, 'fail' with the
            offending X, H1 and H2 otherwise
    """
    if seed is None:
        seed = c.default('seed')
    group = _ProductGroup(moduli)
    if proposals is None:
        proposals = 2*group.order
    rng = np.random.default_rng(seed)
    subgroups = group.subgroups()
    masks = [group.mask(H) for H in subgroups]
    sizes = []
    for trial in range(trials):
        i, j = rng.integers(len(subgroups), size=2)
        union = masks[i] | masks[j]
        X = [int(rng.integers(group.order))]
        for y in rng.integers(group.order, size=proposals):
            y = int(y)
            if y in X:
                continue
            if union[group.sub[y, X]].all() and union[group.sub[X, y]].all():
                X.append(y)
        diffs = group.sub[np.ix_(X, X)].ravel()
        if not (masks[i][diffs].all() or masks[j][diffs].all()):
            logger.warning('Dichotomy fails for X=%s', X)
            return Certificate(
                kind='two_subgroups', verdict='fail',
                witness={'X': [group.element(x) for x in X],
                         'H1': [group.element(h) for h in sorted(subgroups[i])],
                         'H2': [group.element(h)
                                for h in sorted(subgroups[j])]},
                details={'moduli': list(moduli), 'trial': trial})
        sizes.append(len(X))
    return Certificate(kind='two_subgroups', verdict='pass',
                       details={'moduli': list(moduli), 'trials': trials,
                                'seed': seed,
                                'subgroups': len(subgroups),
                                'max_set_size': max(sizes, default=0)})
