#!/bin/python
# -*- coding: utf-8 -*-

"""exact dense linear algebra over F_p

Small matrices go through a jitted row-echelon kernel with first-nonzero pivoting. Large ones are ranked by a blocked elimination whose trailing updates run as float64 matrix products, which stay exact as long as inner_dim*(p-1)^2 < 2^53.
"""

import time
import numpy as np
from numba import njit

BLOCKED_THRESHOLD = 4096
BLOCK_SIZE = 256
LEAF_WIDTH = 32
EXACT_FLOAT = 2**53


class FeasibilityError(MemoryError):
    pass


def storage_dtype(p):
    """smallest integer word holding p^2"""
    return np.int32 if p * p < 2**31 else np.int64


def check_feasible(rows, cols, guard, knob='feasibility_guard'):
    """Refuse dense matrices with more than `guard` entries. `knob` names the configuration key in the message."""

    if guard is not None and rows * cols > guard:
        advice = 'Use the artinian path or raise `%s`.' if knob == 'feasibility_guard' else 'Raise `%s`.'
        raise FeasibilityError(('[check_feasible:] a %s x %s matrix has %.3g entries, above the guard of %.3g. ' + advice) % (
            rows, cols, rows * cols, guard, knob))


class MatrixFp(object):
    """Dense matrix over F_p. Entries are reduced into [0, p) and the array is read-only.
    """

    def __init__(self, entries, p):

        a = np.asarray(entries)
        if a.ndim != 2:
            raise ValueError('MatrixFp needs a 2d array, got shape %s' %
                             (a.shape,))

        self.p = int(p)
        dtype = storage_dtype(self.p)
        if a.dtype == dtype and a.size and a.min() >= 0 and a.max() < self.p:
            self.a = a
        else:
            self.a = np.mod(a.astype(np.int64), self.p).astype(dtype)
        self.a.flags.writeable = False

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    @property
    def T(self):
        return MatrixFp(self.a.T, self.p)

    def __matmul__(self, other):
        return MatrixFp(mulmod(self.a, other.a, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, MatrixFp) and self.p == other.p and np.array_equal(self.a, other.a)

    def __repr__(self):
        return 'MatrixFp(%s x %s over F_%s)' % (self.rows, self.cols, self.p)


def mulmod(a, b, p):
    """exact product of two reduced integer arrays, reduced mod p"""

    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)

    if a.shape[-1] * (p - 1)**2 < 2**62:
        return (a @ b) % p

    # split the inner dimension so that partial sums fit into int64
    step = max(1, 2**62 // (p - 1)**2)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, a.shape[1], step):
        out = (out + a[:, s:s+step] @ b[s:s+step]) % p

    return out


@njit(cache=True, nogil=True)
def inv_mod(x, p):

    t, newt = 0, 1
    r, newr = p, x % p
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr

    return t % p


@njit(cache=True, nogil=True)
def echelon_kernel(a, p, reduced):
    """in-place row echelon form of the int64 array `a`

    Pivot of each column is the first nonzero row at or below the current one. With `reduced` the pivot columns are cleared above as well and pivots are normalized to 1.
    """

    m, n = a.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0

    for c in range(n):
        if r == m:
            break

        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue

        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp

        if reduced:
            inv = inv_mod(a[r, c], p)
            for j in range(c, n):
                a[r, j] = (a[r, j] * inv) % p
            start = 0
        else:
            start = r + 1

        head = a[r, c]
        hinv = inv_mod(head, p)
        for i in range(start, m):
            if i == r:
                continue
            f = a[i, c]
            if f != 0:
                f = (f * hinv) % p
                for j in range(c, n):
                    if a[r, j] != 0:
                        a[i, j] = (a[i, j] - f * a[r, j]) % p

        pivots[r] = c
        r += 1

    return r, pivots[:r]


@njit(cache=True, nogil=True)
def profile_kernel(a, p):
    """row-rank profile of the int64 array `a` (destroyed)

    Returns the original indices of the pivot rows and their pivot columns, in elimination order.
    """

    m, n = a.shape
    perm = np.arange(m)
    prow = np.empty(min(m, n), dtype=np.int64)
    pcol = np.empty(min(m, n), dtype=np.int64)
    r = 0

    for c in range(n):
        if r == m:
            break

        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue

        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
            tmp = perm[r]
            perm[r] = perm[piv]
            perm[piv] = tmp

        hinv = inv_mod(a[r, c], p)
        for i in range(r + 1, m):
            f = a[i, c]
            if f != 0:
                f = (f * hinv) % p
                for j in range(c, n):
                    if a[r, j] != 0:
                        a[i, j] = (a[i, j] - f * a[r, j]) % p

        prow[r] = perm[r]
        pcol[r] = c
        r += 1

    return prow[:r], pcol[:r]


@njit(cache=True, nogil=True)
def inverse_kernel(b, p):
    """inverse of the invertible square int64 array `b` by Gauss-Jordan"""

    k = b.shape[0]
    w = np.zeros((k, 2 * k), dtype=np.int64)
    w[:, :k] = b
    for i in range(k):
        w[i, k + i] = 1

    echelon_kernel(w, p, True)

    return w[:, k:].copy()


def _profile(w, p, width):
    """Blocked row-rank profile of the float array `w` (destroyed).

    Columns are processed in panels of `width`. The pivot rows of a panel are found on a copy (recursively, down to LEAF_WIDTH), swapped to the top of the active block, and eliminated from the remaining rows by one matrix product per column chunk.
    """

    m, n = w.shape
    perm = np.arange(m)
    rows, cols = [], []
    r0 = 0

    for c in range(0, n, width):
        if r0 == m:
            break

        c1 = min(c + width, n)
        panel = w[r0:, c:c1]

        if c1 - c <= LEAF_WIDTH:
            lrows, lcols = profile_kernel(panel.astype(np.int64), p)
        else:
            lrows, lcols = _profile(panel.astype(np.float64), p, LEAF_WIDTH)
            lrows, lcols = np.asarray(lrows, dtype=np.int64), np.asarray(lcols, dtype=np.int64)

        k = len(lrows)
        if not k:
            continue

        # move the pivot rows to r0..r0+k, tracking where every row went
        where = np.arange(m - r0)
        who = np.arange(m - r0)
        for t, lr in enumerate(lrows):
            src = where[lr]
            if src != t:
                w[[r0 + t, r0 + src]] = w[[r0 + src, r0 + t]]
                perm[[r0 + t, r0 + src]] = perm[[r0 + src, r0 + t]]
                other = who[t]
                who[t], who[src] = lr, other
                where[lr], where[other] = t, src

        piv_cols = c + lcols
        top = w[r0:r0+k]
        binv = inverse_kernel(top[:, piv_cols].astype(np.int64), p)

        below = w[r0+k:]
        if below.shape[0]:
            x = np.mod(below[:, piv_cols].astype(np.float64) @ binv.astype(np.float64), p)

            chunk = max(width, 2**24 // max(1, below.shape[0]))
            for c2 in range(c1, n, chunk):
                c3 = min(c2 + chunk, n)
                upd = np.mod(x @ top[:, c2:c3].astype(np.float64), p)
                blk = below[:, c2:c3] - upd
                blk[blk < 0] += p
                below[:, c2:c3] = blk

        rows.extend(perm[r0:r0+k])
        cols.extend(piv_cols)
        r0 += k

    return rows, cols


def rank_naive(a, p):
    """textbook elimination on a copy; the reference every other path must agree with"""

    work = np.array(a, dtype=np.int64)
    if not work.size:
        return 0
    r, _ = echelon_kernel(work, p, False)

    return int(r)


def rank_blocked(a, p, block_size=BLOCK_SIZE):

    m, n = a.shape
    if not a.size:
        return 0

    width = min(block_size, EXACT_FLOAT // (p - 1)**2)
    if width < 1:
        return rank_naive(a, p)

    dtype = np.float32 if p < 2**24 else np.float64
    rows, _ = _profile(np.array(a, dtype=dtype), p, width)

    return len(rows)


def rank(M, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """Rank of `M` over F_p.

    Parameters
    ----------
    M : MatrixFp
    blocked_threshold : int, optional
        matrices with at least this many rows use the blocked path
    block_size : int, optional
        panel width of the blocked path
    verbose : bool, optional
        print dimensions and timing

    Returns
    -------
    int
    """

    if verbose:
        st = time.time()

    if M.rows >= blocked_threshold:
        r = rank_blocked(M.a, M.p, block_size)
    else:
        r = rank_naive(M.a, M.p)

    if verbose:
        print('[rank:]'.ljust(15, ' ') + ' rank %s of a %s x %s matrix over F_%s (%ss).' %
              (r, M.rows, M.cols, M.p, np.round(time.time() - st, 3)))

    return r


def echelon(M):
    """Reduced row echelon form and pivot columns of `M`"""

    work = np.array(M.a, dtype=np.int64)
    if not work.size:
        return MatrixFp(work.reshape(M.shape), M.p), np.zeros(0, dtype=np.int64)

    r, pivots = echelon_kernel(work, M.p, True)

    return MatrixFp(work[:r], M.p), np.array(pivots)


def kernel_basis(M):
    """Basis of the right kernel of `M`, as the columns of a MatrixFp.

    Column t has a 1 at the t-th free (non-pivot) coordinate, zeros at the other free coordinates, and is determined by the reduced echelon form elsewhere. So the output does not depend on anything but `M`.
    """

    p = M.p
    R, pivots = echelon(M)
    free = np.setdiff1d(np.arange(M.cols), pivots)

    K = np.zeros((M.cols, len(free)), dtype=np.int64)
    K[free, np.arange(len(free))] = 1
    if len(pivots):
        K[pivots] = (-R.a[:, free].astype(np.int64)) % p

    return MatrixFp(K, p)


def quotient_coordinates(S):
    """Linear map F_p^n -> F_p^(n - dim S) vanishing exactly on the column span of `S`.

    The quotient representatives are the non-pivot coordinates of the reduced echelon form of span(S): a vector is reduced against that form and its non-pivot entries are read off.
    """

    p = S.p
    n = S.rows
    R, pivots = echelon(S.T)
    free = np.setdiff1d(np.arange(n), pivots)

    Q = np.zeros((len(free), n), dtype=np.int64)
    Q[np.arange(len(free)), free] = 1
    if len(pivots):
        Q[:, pivots] = (-R.a[:, free].astype(np.int64).T) % p

    return MatrixFp(Q, p)


def random_invertible(n, p, rng):
    """random invertible n x n matrix from a SplitMix64 stream"""

    while True:
        G = MatrixFp(rng.matrix(n, n, p), p)
        if rank_naive(G.a, p) == n:
            return G
