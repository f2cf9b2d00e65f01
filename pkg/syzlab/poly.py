#!/bin/python
# -*- coding: utf-8 -*-

"""dense univariate polynomials over F_p

A polynomial is a fixed-length int64 coefficient vector indexed by degree, so that spaces of polynomials of bounded degree are plain coordinate spaces. Leading zeros are allowed.
"""

import numpy as np
from .ff import inv


def as_poly(coeffs, p):
    return np.mod(np.asarray(coeffs, dtype=np.int64), p)


def poly_degree(f):
    """index of the last nonzero coefficient, -1 for the zero polynomial"""

    nz = np.flatnonzero(f)
    return int(nz[-1]) if nz.size else -1


def poly_mul(f, h, p):
    """coefficient convolution; the degree bound is the sum of both bounds"""
    return np.convolve(as_poly(f, p), as_poly(h, p)) % p


def poly_mul_table(F, H, p):
    """All products of the rows of `F` with the rows of `H`.

    Parameters
    ----------
    F : array
        (a, d+1) coefficient rows
    H : array
        (b, e+1) coefficient rows

    Returns
    -------
    array
        (a, b, d+e+1) with out[i, j] the coefficients of F[i]*H[j]
    """

    F = np.asarray(F, dtype=np.int64)
    H = np.asarray(H, dtype=np.int64)
    a, d1 = F.shape
    b, e1 = H.shape

    out = np.zeros((a, b, max(d1 + e1 - 1, 0)), dtype=np.int64)
    for k in range(d1):
        out[:, :, k:k+e1] += F[:, k][:, None, None] * H[None]
        # keep partial sums small
        if k % 1024 == 1023:
            out %= p

    return out % p


def evaluate_at(f, x, p):
    """Horner evaluation of f at x"""

    acc = 0
    x = int(x) % p
    for c in np.asarray(f)[::-1]:
        acc = (acc * x + int(c)) % p

    return acc


def powers(x, d, p):
    """(1, x, ..., x^d) mod p"""

    out = np.empty(d + 1, dtype=np.int64)
    acc = 1
    for k in range(d + 1):
        out[k] = acc
        acc = acc * int(x) % p

    return out


def vandermonde_rows(xs, d, p):
    """one row of powers up to degree d per point"""

    if d < 0:
        return np.zeros((len(xs), 0), dtype=np.int64)
    return np.array([powers(x, d, p) for x in xs], dtype=np.int64).reshape(len(xs), d + 1)


def _trim(f):
    return [int(c) for c in f[:poly_degree(f) + 1]]


def _divmod(num, den, p):
    """long division on coefficient lists; den has nonzero leading coefficient"""

    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = inv(den[-1], p)

    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] * lead % p
        q[shift] = c
        for k, dc in enumerate(den):
            num[shift + k] = (num[shift + k] - c * dc) % p
        while num and num[-1] == 0:
            num.pop()

    return q, num


def poly_gcd(f, h, p):
    """Monic gcd of f and h by Euclid with exact field inverses. gcd(0, 0) is 0."""

    a, b = _trim(as_poly(f, p)), _trim(as_poly(h, p))

    while b:
        _, rem = _divmod(a, b, p)
        a, b = b, rem

    if not a:
        return np.zeros(1, dtype=np.int64)

    lead = inv(a[-1], p)

    return np.array([c * lead % p for c in a], dtype=np.int64)
