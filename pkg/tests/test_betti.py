#!/bin/python
# -*- coding: utf-8 -*-

import pytest
from syzlab.ff import ParameterError
from syzlab.betti import BettiTable, chi_canonical, chi_diagonal, expected_table, is_exceptional, render_table, ring_chi, with_excess

G8_OBSERVED = '\n'.join([
    '        0 1  2  3  4 5',
    ' total: 1 8 36 56 35 8',
    '     0: 1 .  .  .  . .',
    '     1: . 7  1  .  . .',
    '     2: . 1 35 56 35 8',
])


def test_genus_ten_ring_table():

    T = expected_table(10, 'ring')
    assert T.shape == (3, 8)
    assert T.entries[1].tolist() == [0, 18, 42, 0, 0, 0, 0, 0]
    assert T.entries[2].tolist() == [0, 0, 0, 126, 210, 162, 63, 10]
    assert T.totals.tolist() == [1, 18, 42, 126, 210, 162, 63, 10]
    assert T.is_natural() and T.is_pure()


def test_genus_eight_failure_table():

    T = with_excess(expected_table(8, 'paracanonical_ring'), 2, 1)
    assert T.totals.tolist() == [1, 8, 36, 56, 35, 8]
    assert not T.is_natural()
    assert render_table(T) == G8_OBSERVED


G6_TORSION = '\n'.join([
    '       0  1  2 3',
    'total: 5 10 10 5',
    '    0: 5 10  . .',
    '    1: .  . 10 5',
])


def test_module_tables_use_a_narrower_label():

    T = expected_table(6, 'torsion')
    assert T.entries.tolist() == [[5, 10, 0, 0], [0, 0, 10, 5]]
    assert render_table(T) == G6_TORSION
    assert render_table(expected_table(5, 'canonical')).splitlines()[1].startswith('total:')


def test_ring_chi_matches_table():
    assert [ring_chi(8, w) for w in range(2, 8)] == [7, 0, -35, -56, -35, -8]


def test_euler_characteristics():

    assert chi_diagonal(10, 3) == 126
    assert chi_diagonal(10, 4) == 0
    assert chi_diagonal(6, 1) == 10
    assert chi_diagonal(6, 0) == 5
    assert chi_canonical(9, 4) == 0
    assert chi_canonical(8, 3) == 35
    with pytest.raises(ParameterError):
        chi_diagonal(10, 9)


@pytest.mark.parametrize('g,ell,k,expected', [(10, 3, 1, True), (6, 5, 2, True), (8, 3, 1, False),
                                              (12, 3, 1, False), (6, 5, 1, False), (14, 3, 1, False)])
def test_exceptional_torsion_cases(g, ell, k, expected):
    assert is_exceptional(g, ell, k) == expected


def test_exceptional_bump():

    T = expected_table(10, 'torsion', 3, 1)
    N = expected_table(10, 'torsion')
    assert T.entries[0, 4] == N.entries[0, 4] + 1 == 1
    assert T.entries[1, 3] == N.entries[1, 3] + 1
    assert N.is_natural() and not T.is_natural()

    with pytest.raises(ParameterError):
        is_exceptional(9, 3, 1)
    with pytest.raises(ParameterError):
        is_exceptional(10, 3, 2)


def test_canonical_table():

    T = expected_table(9, 'canonical')
    assert T.shape == (2, 8)
    assert T.entries[0].tolist() == [8, 48, 112, 112, 0, 0, 0, 0]
    assert T.entries[1].tolist() == [0, 0, 0, 0, 112, 112, 48, 8]


def test_frame_and_dict():

    T = expected_table(6, 'ring')
    frame = T.to_frame()
    assert list(frame.index) == ['0:', '1:', '2:', 'total:']
    assert frame.loc['total:'].tolist() == [1, 10, 15, 6]
    assert T.to_dict()['rows'] == [[1, 0, 0, 0], [0, 0, 0, 0], [0, 10, 15, 6]]
    assert BettiTable(T.to_dict()['rows'], 'ring', 6) == T


def test_unknown_kind():
    with pytest.raises(ParameterError):
        expected_table(8, 'bogus')
