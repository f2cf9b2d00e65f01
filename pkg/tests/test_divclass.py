#!/bin/python
# -*- coding: utf-8 -*-

import pytest
from sympy import Rational
from syzlab.ff import ParameterError
from syzlab.divclass import (DivisorClass, class_formula, derive_class_by_sums, g12_combination_report, kappa1, odd_genus_combination,
                             pullback_delta0)


def test_zvirt_genus_eight():
    assert class_formula('Zvirt', 8, 2) == DivisorClass(2, 27, -4, -4, [-6])


def test_small_classes():

    assert class_formula('U', 3, 2) == DivisorClass(2, 8, -1, -1, [Rational(-3, 2)])
    assert class_formula('U', 3, 3) == DivisorClass(3, 8, -1, -1, [Rational(-7, 3)])
    assert class_formula('Zvirt', 6, 2) == DivisorClass(2, 7, -1, -1, [Rational(-3, 2)])
    assert class_formula('Zvirt', 12, 3) == DivisorClass(3, 364, -56, -56, [-196])
    assert class_formula('Dvirt', 8, 3) == DivisorClass(3, 38, -6, -6, [Rational(-2, 3)])
    assert class_formula('Dvirt', 12, 3) == DivisorClass(3, 434, -70, -70, [Rational(14, 3)])


@pytest.mark.parametrize('i', range(1, 9))
@pytest.mark.parametrize('ell', [2, 3, 4, 5])
def test_u_sums_match_closed_form(i, ell):
    assert derive_class_by_sums('U', 2 * i + 1, ell) == class_formula('U', 2 * i + 1, ell)


@pytest.mark.parametrize('g', [6, 8, 10, 12, 14])
def test_zvirt_sums_match_closed_form_at_level_two(g):
    assert derive_class_by_sums('Zvirt', g, 2) == class_formula('Zvirt', g, 2)


@pytest.mark.parametrize('g', [8, 10, 12, 14])
@pytest.mark.parametrize('ell', [3, 4, 5])
def test_zvirt_sums_scale_the_level_terms(g, ell):

    # the sums give (a^2 - a ell + ell^2)/ell where the closed form has /2
    derived = derive_class_by_sums('Zvirt', g, ell).normalized()
    closed = class_formula('Zvirt', g, ell).normalized()
    assert (derived.lam, derived.d0p, derived.d0pp) == (closed.lam, closed.d0p, closed.d0pp)
    assert derived.d0a == tuple(c * Rational(2, ell) for c in closed.d0a)


def test_zvirt_sums_by_level():

    assert derive_class_by_sums('Zvirt', 10, 3).normalized().d0a == (Rational(-14, 3),)
    assert derive_class_by_sums('Zvirt', 10, 4).normalized().d0a == (Rational(-13, 2), -6)
    assert derive_class_by_sums('Zvirt', 10, 5).normalized().d0a == (Rational(-42, 5), Rational(-38, 5))
    assert class_formula('Zvirt', 10, 5).normalized().d0a == (-21, -19)


def test_genus_twelve_sums_give_the_printed_class():
    assert derive_class_by_sums('Zvirt', 12, 3).normalized() == DivisorClass(3, 13, -2, -2, [Rational(-14, 3)])


def test_dvirt_sums():

    assert derive_class_by_sums('Dvirt', 8, 3) == class_formula('Dvirt', 8, 3)
    # the closed form is 0/0 at g=4, the sums are not
    assert derive_class_by_sums('Dvirt', 4, 3).ell == 3
    with pytest.raises(ParameterError):
        class_formula('Dvirt', 4, 3)


def test_parameter_checks():

    with pytest.raises(ParameterError):
        class_formula('Dvirt', 6, 3)
    with pytest.raises(ParameterError):
        class_formula('Dvirt', 8, 2)
    with pytest.raises(ParameterError):
        class_formula('U', 4, 2)
    with pytest.raises(ParameterError):
        class_formula('Zvirt', 7, 2)
    with pytest.raises(ParameterError):
        class_formula('W', 8, 2)


def test_canonical_and_boundary():

    assert class_formula('Kcanonical', 9, 3) == DivisorClass(3, 13, -2, -2, [-4])
    assert pullback_delta0(5) == DivisorClass(5, 0, 1, 1, [5, 5])
    assert kappa1(2) == DivisorClass(2, 12, -1, -1, [-2])


def test_arithmetic_and_slope():

    Z = class_formula('Zvirt', 12, 3)
    assert Z.normalized() == DivisorClass(3, 13, -2, -2, [-7])
    assert Z.slope() == 13
    assert (Z - Z) == DivisorClass(3)
    assert (Z / 56) * 56 == Z
    assert Z.is_multiple_of(Z.normalized())
    assert Z.to_dict()['coeffs'] == ['364', '-56', '-56', '-196']
    with pytest.raises(ParameterError):
        Z + DivisorClass(2)


@pytest.mark.parametrize('i', range(1, 21))
def test_odd_genus_combination(i):

    out = odd_genus_combination(i)
    assert out['identity']
    assert out['lam'] == Rational(6 * (2 * i + 3), i + 1)
    assert (out['verdict'] == 'big') == (i > 5)
    if i == 5:
        assert out['verdict'] == 'boundary'


def test_genus_twelve_report():

    rep = g12_combination_report()
    assert rep['reproduces_target']
    assert not rep['printed_is_multiple_of_Z']
    assert rep['printed_is_multiple_of_derived_Z']
    assert not rep['derived_matches_closed_form']
    assert rep['Z_slope'] == '13'
    hits = [(r['Z'], r['D']) for r in rep['candidates'] if r['matches']]
    assert ('printed', 'full') in hits
    assert ('derived_normalized', 'full') in hits
    assert ('derived', 'full') not in hits
