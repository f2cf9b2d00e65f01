#!/bin/python
# -*- coding: utf-8 -*-

"""expected Betti tables from Euler characteristics, and their text rendering
"""

import json
import numpy as np
import pandas as pd
from math import comb
from sympy import Rational
from .ff import ParameterError

# width of the label column per table kind
LABEL_WIDTH = {'ring': 7, 'torsion': 6, 'canonical': 6}

KINDS = {'ring': 'ring', 'paracanonical_ring': 'ring',
         'torsion': 'torsion', 'torsion_module': 'torsion',
         'canonical': 'canonical', 'canonical_twist': 'canonical'}


class BettiTable(object):
    """Graded Betti numbers, entry (j, i) in row j and column (homological step) i.

    For the ring kind row j holds K_{i,j}. For the module kinds, which are generated in degree one, row j holds K_{i,j+1}.
    """

    def __init__(self, entries, kind='ring', g=None):

        self.entries = np.array(entries, dtype=np.int64)
        self.kind = KINDS.get(kind, kind)
        self.g = g

    def __repr__(self):
        return 'BettiTable(%s, g=%s)\n%s' % (self.kind, self.g, render_table(self))

    def __eq__(self, other):
        return isinstance(other, BettiTable) and np.array_equal(self.entries, other.entries)

    def __getitem__(self, key):
        return self.entries[key]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def totals(self):
        return self.entries.sum(axis=0)

    def copy(self):
        return BettiTable(self.entries.copy(), self.kind, self.g)

    def diagonals(self):
        """nonzero entries grouped by i + j"""

        out = {}
        for j, i in zip(*np.nonzero(self.entries)):
            out.setdefault(i + j, []).append((j, i))

        return out

    def is_natural(self):
        return all(len(v) == 1 for v in self.diagonals().values())

    def is_pure(self):
        return all(np.count_nonzero(col) <= 1 for col in self.entries.T)

    def to_frame(self):
        frame = pd.DataFrame(self.entries, index=['%d:' % j for j in range(
            self.shape[0])], columns=range(self.shape[1]))
        frame.loc['total:'] = self.totals
        return frame

    def to_dict(self):
        return {'kind': self.kind, 'g': self.g, 'rows': self.entries.tolist(), 'totals': self.totals.tolist()}

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def chi_diagonal(g, i):
    """K_{i,1} - K_{i-1,2} for the modules twisted by a nontrivial torsion bundle with L = K (x) eta.

    Evaluated as (g-1)C(g-2,i)(1-2i/(g-2)) in exact rationals.
    """

    if g < 4 or not 0 <= i <= g - 2:
        raise ParameterError('chi_diagonal needs g >= 4 and 0 <= i <= g-2')

    val = (g - 1) * comb(g - 2, i) * (1 - Rational(2 * i, g - 2))
    if not val.is_integer:
        raise ArithmeticError('non-integral Euler characteristic %s' % val)

    return int(val)


def chi_canonical(g, i):
    """K_{i,1} - K_{i-1,2} for the sections of eta (x) K^q over the canonical curve"""
    return comb(g - 1, i) * (g - 1 - 2 * i)


def ring_chi(g, w):
    """b_{w-1,1} - b_{w-2,2} for the paracanonical coordinate ring, from its Hilbert function"""

    n = g - 1

    def h(q):
        return 1 if q == 0 else q * (2 * g - 2) - g + 1

    total = sum((-1)**i * comb(n, i) * h(w - i) for i in range(min(n, w) + 1))

    return (-1)**(w - 1) * total


def is_exceptional(g, ell, k):
    """the torsion module is predicted to carry one extra syzygy"""

    if g % 2 or not 1 <= k <= ell - 2:
        raise ParameterError('need even g and 1 <= k <= ell-2')

    return (2 * k + 1) % ell == 0 and g % 4 == 2 and comb(g - 3, g // 2 - 1) % 2 == 1


def excess_rows(kind):
    return (1, 2) if KINDS.get(kind, kind) == 'ring' else (0, 1)


def with_excess(table, i, e):
    """copy of `table` with `e` added at K_{i,1} and at its partner K_{i-1,2}"""

    out = table.copy()
    if not e:
        return out

    r1, r2 = excess_rows(table.kind)
    out.entries[r1, i] += e
    out.entries[r2, i - 1] += e

    return out


def expected_table(g, kind='ring', ell=None, k=None):
    """The natural Betti table predicted by the Euler characteristics.

    Parameters
    ----------
    g : int
        the genus
    kind : str
        'ring' for the paracanonical coordinate ring, 'torsion' for the module of eta^k twists, 'canonical' for the eta twist of the canonical ring
    ell : int, optional
        the level, needed for the torsion exception
    k : int, optional
        the twist of the torsion kind

    Returns
    -------
    BettiTable
    """

    kind = KINDS.get(kind)
    if kind is None:
        raise ParameterError('unknown table kind')
    if g < 4:
        raise ParameterError('expected tables need g >= 4, got %s' % g)

    if kind == 'ring':
        entries = np.zeros((3, g - 2), dtype=np.int64)
        entries[0, 0] = 1
        for w in range(2, g):
            chi = ring_chi(g, w)
            if chi > 0:
                entries[1, w - 1] = chi
            elif chi < 0:
                entries[2, w - 2] = -chi
        return BettiTable(entries, kind, g)

    if kind == 'torsion':
        width, top, chi = g - 2, g - 2, lambda i: chi_diagonal(g, i)
    else:
        width, top, chi = g - 1, g - 1, lambda i: chi_canonical(g, i)

    entries = np.zeros((2, width), dtype=np.int64)
    for i in range(top + 1):
        c = chi(i)
        if c > 0:
            entries[0, i] = c
        elif c < 0:
            entries[1, i - 1] = -c
    table = BettiTable(entries, kind, g)

    if kind == 'torsion' and ell is not None and k is not None and is_exceptional(g, ell, k):
        table = with_excess(table, g // 2 - 1, 1)

    return table


def render_table(t):
    """Text block: a header of column indices, the totals, then one line per row with '.' for zeros"""

    rows, cols = t.shape
    totals = t.totals
    label = LABEL_WIDTH.get(t.kind, 7)

    cells = [[('.' if v == 0 else str(v)) for v in row] for row in t.entries]
    width = [max([len(str(i)), len(str(totals[i]))] + [len(r[i]) for r in cells])
             for i in range(cols)]

    lines = [' ' * label + ''.join(' ' + str(i).rjust(width[i]) for i in range(cols)),
             'total:'.rjust(label) + ''.join(' ' + str(totals[i]).rjust(width[i]) for i in range(cols))]
    for j, row in enumerate(cells):
        lines.append(('%d:' % j).rjust(label) +
                     ''.join(' ' + row[i].rjust(width[i]) for i in range(cols)))

    return '\n'.join(lines)
