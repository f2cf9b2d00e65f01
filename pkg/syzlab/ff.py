#!/bin/python
# -*- coding: utf-8 -*-

"""prime fields with a chosen root of unity, and the seeded generator behind every random choice
"""

import sympy
from collections import namedtuple

MASK64 = (1 << 64) - 1
# polynomial product tables sum 1024 products below p^2 in int64
MAX_PRIME = 2**26


class ParameterError(ValueError):
    pass


class FieldParams(namedtuple('FieldParams', 'p ell r')):
    """The prime field F_p together with an element `r` of exact multiplicative order `ell`.
    """

    __slots__ = ()

    def __new__(cls, p, ell, r):

        p, ell, r = int(p), int(ell), int(r) % int(p)

        if p == 2 or not sympy.isprime(p):
            raise ParameterError('p=%s is not an odd prime' % p)
        if p > MAX_PRIME:
            raise ParameterError('p=%s is above the supported bound %s' % (p, MAX_PRIME))
        if ell < 2 or (p - 1) % ell:
            raise ParameterError('p=%s is not 1 mod ell=%s' % (p, ell))
        if r == 0 or sympy.n_order(r, p) != ell:
            raise ParameterError(
                'r=%s is not a primitive %s-th root of unity mod %s' % (r, ell, p))

        return super(FieldParams, cls).__new__(cls, p, ell, r)

    def to_dict(self):
        return {'p': self.p, 'ell': self.ell, 'r': self.r}


def inv(x, p):
    """Inverse of x in F_p"""

    x = int(x) % p
    if not x:
        raise ZeroDivisionError('0 has no inverse mod %s' % p)

    return pow(x, p - 2, p)


def smallest_root(p, ell):
    """The smallest element of F_p of exact order `ell`"""

    base = pow(sympy.primitive_root(p), (p - 1) // ell, p)

    return min(pow(base, k, p) for k in range(1, ell) if sympy.igcd(k, ell) == 1)


def select_prime_and_root(ell, prange=(10001, 29999)):
    """Find the smallest prime p = 1 mod `ell` in the (inclusive) range and the smallest primitive `ell`-th root of unity in F_p.

    Parameters
    ----------
    ell : int
        the torsion level, at least 2
    prange : tuple of int, optional
        inclusive search interval for p

    Returns
    -------
    FieldParams
    """

    ell = int(ell)
    lo, hi = (int(b) for b in prange)

    if ell < 2:
        raise ParameterError('ell must be at least 2, got %s' % ell)
    if lo > hi:
        raise ParameterError('empty prime range [%s, %s]' % (lo, hi))

    p = sympy.nextprime(max(lo, 3) - 1)
    while p <= hi:
        if (p - 1) % ell == 0:
            return FieldParams(p, ell, smallest_root(p, ell))
        p = sympy.nextprime(p)

    raise ParameterError(
        'no prime p = 1 mod %s in [%s, %s]' % (ell, lo, hi))


def field_for_prime(p, ell):
    """FieldParams for a user-supplied prime"""

    p = int(p)
    if p == 2 or not sympy.isprime(p):
        raise ParameterError('p=%s is not an odd prime' % p)
    if p > MAX_PRIME:
        raise ParameterError('p=%s is above the supported bound %s' % (p, MAX_PRIME))
    if (p - 1) % ell:
        raise ParameterError('p=%s is not 1 mod ell=%s' % (p, ell))

    return FieldParams(p, ell, smallest_root(p, ell))


def root_powers(field):
    """[r^0, r^1, ..., r^(ell-1)] in F_p"""
    return [pow(field.r, k, field.p) for k in range(field.ell)]


class SplitMix64(object):
    """SplitMix64 stream. The recurrence is fixed so that a seed reproduces the same curve everywhere.
    """

    def __init__(self, seed=0):
        self.state = int(seed) & MASK64

    def next(self):

        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64

        return z ^ (z >> 31)

    def below(self, n):
        """uniform-ish draw from range(n) (plain modulo reduction)"""
        return self.next() % int(n)

    def nonzero(self, p):
        """draw from F_p^*"""
        return 1 + self.below(p - 1)

    def matrix(self, rows, cols, p):
        return [[self.below(p) for _ in range(cols)] for _ in range(rows)]


def derive_seed(seed, index):
    """Per-trial seed: one SplitMix64 step from seed + index"""
    return SplitMix64((int(seed) + int(index)) & MASK64).next()
