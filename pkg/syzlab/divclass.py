#!/bin/python
# -*- coding: utf-8 -*-

"""divisor classes on the level-ell moduli space over irreducible curves, in exact rationals

Every class lives in the basis lambda, delta_0', delta_0'', delta_0^(a) for a = 1..floor(ell/2). kappa_1 is eliminated through kappa_1 = 12 lambda - delta, with delta pulled back as delta_0' + delta_0'' + ell * sum delta_0^(a).
"""

import json
import sympy
from math import comb
from sympy import Rational
from .ff import ParameterError

KINDS = ('U', 'Zvirt', 'Dvirt', 'Kcanonical', 'pullback_delta0')


def binom(n, k):
    """binomial coefficient, zero outside 0 <= k <= n"""
    return comb(n, k) if 0 <= k <= n else 0


class DivisorClass(object):
    """A Q-divisor class lam*lambda + d0p*delta_0' + d0pp*delta_0'' + sum_a d0a[a-1]*delta_0^(a).
    """

    def __init__(self, ell, lam=0, d0p=0, d0pp=0, d0a=None):

        self.ell = int(ell)
        if self.ell < 2:
            raise ParameterError('level must be at least 2, got %s' % ell)

        self.lam = Rational(lam)
        self.d0p = Rational(d0p)
        self.d0pp = Rational(d0pp)

        d0a = [0] * (self.ell // 2) if d0a is None else list(d0a)
        if len(d0a) != self.ell // 2:
            raise ParameterError(
                'need %s delta_0^(a) coefficients' % (self.ell // 2))
        self.d0a = tuple(Rational(c) for c in d0a)

    @property
    def coeffs(self):
        return (self.lam, self.d0p, self.d0pp) + self.d0a

    @property
    def basis(self):
        return ['lambda', 'd0p', 'd0pp'] + ['d0a%d' % a for a in range(1, self.ell // 2 + 1)]

    def _check(self, other):
        if not isinstance(other, DivisorClass) or other.ell != self.ell:
            raise ParameterError('classes live on different levels')

    def __add__(self, other):
        self._check(other)
        c = [x + y for x, y in zip(self.coeffs, other.coeffs)]
        return DivisorClass(self.ell, c[0], c[1], c[2], c[3:])

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        s = Rational(s)
        c = [s * x for x in self.coeffs]
        return DivisorClass(self.ell, c[0], c[1], c[2], c[3:])

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1 / Rational(s))

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self.ell == other.ell and self.coeffs == other.coeffs

    def __repr__(self):
        return 'DivisorClass(%s)' % self.expr

    @property
    def expr(self):
        syms = sympy.symbols(' '.join(self.basis))
        return sum(c * s for c, s in zip(self.coeffs, syms))

    def normalized(self):
        """the multiple with delta_0' coefficient -2, so that the lambda coefficient compares to the canonical class"""

        if not self.d0p:
            raise ParameterError('no delta_0\' term to normalize by')

        return self * (Rational(-2) / self.d0p)

    def slope(self):
        return self.normalized().lam

    def is_multiple_of(self, other):
        """self = s * other for some rational s"""

        pairs = [(x, y) for x, y in zip(self.coeffs, other.coeffs)]
        if any(y == 0 and x != 0 for x, y in pairs):
            return False
        ratios = {x / y for x, y in pairs if y != 0}

        return len(ratios) <= 1

    def to_dict(self):
        return {'basis': self.basis, 'coeffs': [str(c) for c in self.coeffs]}

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def lam_class(ell):
    return DivisorClass(ell, lam=1)


def pullback_delta0(ell):
    """delta_0' + delta_0'' + ell * sum_a delta_0^(a)"""
    return DivisorClass(ell, 0, 1, 1, [ell] * (ell // 2))


def kappa1(ell):
    """12 lambda minus the pullback of delta_0"""
    return lam_class(ell) * 12 - pullback_delta0(ell)


def ramification_term(ell):
    """sum_a a(ell-a)/ell delta_0^(a)"""
    return DivisorClass(ell, d0a=[Rational(a * (ell - a), ell) for a in range(1, ell // 2 + 1)])


def c1_E(b, ell):
    return lam_class(ell) + kappa1(ell) * binom(b, 2) - ramification_term(ell) / 2


def c1_F(b, ell):
    return lam_class(ell) + kappa1(ell) * binom(b, 2) - ramification_term(ell) * Rational((b - 2)**2, 2)


def c1_G(b, ell):
    return lam_class(ell) + kappa1(ell) * binom(b, 2) - ramification_term(ell) * Rational(b * b, 2)


def c1_prym_hodge(ell):
    """first Chern class of the Prym-Hodge bundle"""
    return c1_G(1, ell)


def c1_wedge_sym(a, b, n, e):
    """c_1 of L^a E (x) Sym^b E for a rank n bundle E with c_1(E) = e"""

    sym_rank = binom(n + b - 1, b)

    return e * (sym_rank * binom(n - 1, a - 1)) + e * (binom(n, a) * Rational(b, n) * sym_rank)


def _half_genus(kind, g, ell):
    """the half-genus index i of the class, after checking the genus and level constraints"""

    if kind == 'U':
        if g % 2 == 0 or g < 3:
            raise ParameterError('U needs odd g = 2i+1 >= 3, got %s' % g)
        return (g - 1) // 2

    if kind == 'Zvirt':
        if g % 2 or g < 6:
            raise ParameterError('Zvirt needs even g = 2i+6 >= 6, got %s' % g)
        return (g - 6) // 2

    if kind == 'Dvirt':
        if g % 2 or g < 4:
            raise ParameterError('Dvirt needs even g = 2i+2 >= 4, got %s' % g)
        if ell < 3:
            raise ParameterError('Dvirt needs level at least 3, got %s' % ell)
        i = (g - 2) // 2
        if i % 2 == 0 and binom(2 * i - 1, i) % 2:
            raise ParameterError(
                'Dvirt needs i odd or C(2i-1, i) even, got i=%s' % i)
        return i

    raise ParameterError('unknown class kind %s' % kind)


def class_formula(kind, g, ell, normalized=False):
    """The closed-form class of one of the degeneracy loci.

    Parameters
    ----------
    kind : str
        one of 'U', 'Zvirt', 'Dvirt', 'Kcanonical', 'pullback_delta0'
    g : int
        the genus
    ell : int
        the level
    normalized : bool, optional
        drop the binomial prefactor of U, Zvirt and Dvirt

    Returns
    -------
    DivisorClass
    """

    A = range(1, ell // 2 + 1)

    if kind == 'Kcanonical':
        # restriction to the irreducible locus, the delta_i terms are dropped
        return DivisorClass(ell, 13, -2, -2, [-(ell + 1)] * (ell // 2))

    if kind == 'pullback_delta0':
        return pullback_delta0(ell)

    i = _half_genus(kind, g, ell)

    if kind == 'U':
        pre = Rational(binom(2 * i, i), 2 * i - 1)
        bracket = DivisorClass(ell, 3 * i + 1, -Rational(i, 2), -Rational(i, 2),
                               [-Rational(i*ell**2 + 2*a*a*i - 2*a*ell*i - a*a + a*ell, 2 * ell) for a in A])

    elif kind == 'Zvirt':
        pre = binom(2 * i + 2, i)
        bracket = DivisorClass(ell, Rational(3 * (2 * i + 7), i + 3), -1, -1,
                               [-Rational(a*a - a*ell + ell**2, 2) for a in A])

    else:
        if i == 1:
            raise ParameterError(
                'the closed form of Dvirt is 0/0 at g=4; use derive_class_by_sums')
        pre = Rational(binom(2 * i - 2, i), i - 1)
        bracket = DivisorClass(ell, 6 * i + 1, -i, -i,
                               [-Rational(i*ell**2 + 5*a*a*i - 5*a*i*ell - 2*a*a + 2*a*ell, ell) for a in A])

    return bracket if normalized else bracket * pre


def derive_class_by_sums(kind, g, ell):
    """Recompute U, Zvirt or Dvirt from the alternating sums of Chern classes along the Koszul exact sequences.
    """

    i = _half_genus(kind, g, ell)
    lam = lam_class(ell)
    e = c1_prym_hodge(ell)
    total = DivisorClass(ell)

    if kind == 'U':
        for b in range(i + 1):
            term = c1_E(b + 1, ell) * binom(g, i - b) + lam * \
                ((2 * b + 1) * (g - 1) * binom(g - 1, i - b - 1))
            total += term * (-1)**(b + 1)

    elif kind == 'Zvirt':
        n = g - 1
        for j in range(i + 1):
            g_part = c1_G(j + 2, ell) * binom(g - 1, i - j) + e * \
                ((g - 1) * (2 * j + 3) * binom(g - 2, i - j - 1))
            h_part = c1_wedge_sym(i - j, j + 2, n, e)
            total += (g_part - h_part) * (-1)**j

    else:
        for j in range(i + 1):
            term = e * ((g - 1) * (2 * j + 1) * binom(g - 2, i - j - 1)) + \
                c1_F(j + 1, ell) * binom(g - 1, i - j)
            total += term * (-1)**(j + 1)

    return total


def odd_genus_combination(i):
    """alpha * U_{2i+1,3} + beta * (Hurwitz pullback) matching -2(delta_0'+delta_0'') - 4 delta_0^(1).

    U enters through its normalized bracket; the Hurwitz divisor of slope 6(i+2)/(i+1) pulls back to s*lambda - delta_0' - delta_0'' - 3 delta_0^(1).

    Returns
    -------
    dict
        `alpha`, `beta`, `lam` (the resulting lambda coefficient), `identity` (lam equals 6(2i+3)/(i+1)), `positive`, `verdict` in 'big', 'boundary' or 'not big'
    """

    if i < 1:
        raise ParameterError('i must be at least 1, got %s' % i)

    ell = 3
    U = class_formula('U', 2 * i + 1, ell, normalized=True)
    s = Rational(6 * (i + 2), i + 1)
    H = lam_class(ell) * s - pullback_delta0(ell)

    M = sympy.Matrix([[U.d0p, H.d0p], [U.d0a[0], H.d0a[0]]])
    if M.det() == 0:
        raise ArithmeticError('singular system at i=%s' % i)
    alpha, beta = M.solve(sympy.Matrix([-2, -4]))

    combo = U * alpha + H * beta
    lam = combo.lam
    target = Rational(6 * (2 * i + 3), i + 1)

    if lam < 13:
        verdict = 'big'
    elif lam == 13:
        verdict = 'boundary'
    else:
        verdict = 'not big'

    return {'i': i, 'alpha': alpha, 'beta': beta, 'lam': lam, 'class': combo,
            'identity': lam == target and combo.d0pp == -2,
            'positive': bool(alpha > 0 and beta > 0), 'verdict': verdict}


PRINTED_Z12 = (13, -2, -2, Rational(-14, 3))
G12_WEIGHTS = (Rational(31, 36), Rational(1, 36 * 7))
G12_TARGET = (Rational(155, 12), -2, -2, -4)


def g12_combination_report():
    """Evaluate the weighted genus-12 level-3 combination under every candidate normalization of its two classes.

    Nothing is asserted; the report lists each candidate pair, its result, and whether it hits the target (13 - 1/12, -2, -2, -4).
    The Z candidates include the class recomputed from the alternating sums, whose delta_0^(a) terms differ from the closed form for ell >= 3.
    """

    ell = 3
    Z = class_formula('Zvirt', 12, ell)
    derived = derive_class_by_sums('Zvirt', 12, ell)
    D = class_formula('Dvirt', 12, ell)
    printed = DivisorClass(ell, *PRINTED_Z12[:3], d0a=PRINTED_Z12[3:])
    target = DivisorClass(ell, *G12_TARGET[:3], d0a=G12_TARGET[3:])

    zs = {'full': Z, 'bracket': class_formula('Zvirt', 12, ell, normalized=True),
          'slope_normalized': Z.normalized(), 'printed': printed,
          'derived': derived, 'derived_normalized': derived.normalized()}
    ds = {'full': D, 'bracket': class_formula('Dvirt', 12, ell, normalized=True),
          'slope_normalized': D.normalized()}

    rows = []
    for zn, zc in zs.items():
        for dn, dc in ds.items():
            combo = zc * G12_WEIGHTS[0] + dc * G12_WEIGHTS[1]
            rows.append({'Z': zn, 'D': dn, 'result': combo.to_dict()['coeffs'],
                         'matches': combo == target})

    return {'Z': Z.to_dict(), 'D': D.to_dict(), 'Z_bracket': zs['bracket'].to_dict(),
            'D_bracket': ds['bracket'].to_dict(),
            'printed_Z': printed.to_dict(), 'target': target.to_dict(),
            'printed_is_multiple_of_Z': printed.is_multiple_of(Z),
            'derived_Z': derived.to_dict(), 'printed_is_multiple_of_derived_Z': printed.is_multiple_of(derived),
            'derived_matches_closed_form': derived == Z,
            'Z_slope': str(Z.slope()), 'candidates': rows,
            'reproduces_target': any(r['matches'] for r in rows)}
