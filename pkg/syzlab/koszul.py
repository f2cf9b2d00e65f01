#!/bin/python
# -*- coding: utf-8 -*-

"""Koszul differentials on section spaces and the graded pieces of the ideal of a curve
"""

import time
import numpy as np
from math import comb
from itertools import combinations, combinations_with_replacement
from collections import namedtuple
from .ff import ParameterError
from .linalg import MatrixFp, check_feasible, storage_dtype, echelon, kernel_basis, rank, rank_naive, random_invertible, BLOCKED_THRESHOLD, BLOCK_SIZE
from .poly import poly_mul_table
from .curve import section_space, tensor, power

FEASIBILITY_GUARD = 50_000_000
# artinian matrices up to about 25000 x 25000
ARTINIAN_GUARD = 650_000_000

IdealPiece = namedtuple('IdealPiece', 'dim basis monomials surjective')
SymmetryVerdict = namedtuple(
    'SymmetryVerdict', 'm symmetric skew zero_diagonal verdict holds')


class WedgeBasis(object):
    """The k-subsets of {0..n-1} in lexicographic order, indexing a basis of the k-th exterior power
    """

    def __init__(self, n, k):

        self.n = n
        self.k = k
        self.subsets = list(combinations(range(n), k)) if k >= 0 else []
        self.index = {S: i for i, S in enumerate(self.subsets)}

    def __len__(self):
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)

    def __getitem__(self, i):
        return self.subsets[i]

    def __repr__(self):
        return 'WedgeBasis(n=%s, k=%s, size=%s)' % (self.n, self.k, len(self))


def target_pivots(products, p):
    """Pivot coordinates of the span of all products. Restricting to them is injective on that span."""

    nV, nW, D = products.shape
    _, pivots = echelon(MatrixFp(products.reshape(nV * nW, D), p))

    return pivots


def assemble_koszul_matrix(products, p, modulus, guard=FEASIBILITY_GUARD, knob='feasibility_guard'):
    """Matrix of the strand map L^p V (x) W -> L^(p-1) V (x) T.

    Parameters
    ----------
    products : array
        (dim V, dim W, dim T) array holding the coordinates of v_i * w_j in T
    p : int
        exterior degree of the source
    modulus : int
        the prime
    guard : int, optional
        maximal number of matrix entries
    knob : str, optional
        configuration key named when the guard refuses the matrix

    Returns
    -------
    MatrixFp
        columns indexed by (S, j) as s*dim(W) + j, rows by (S', c) as s'*dim(T) + c. The basis element (S, w) maps to sum_t (-1)^t (S minus its t-th index) (x) v_{i_t}*w.
    """

    if p < 1:
        raise ParameterError(
            'the strand index must be at least 1, got %s' % p)

    nV, nW, D = products.shape
    dom = WedgeBasis(nV, p)
    tgt = WedgeBasis(nV, p - 1)

    rows, cols = len(tgt) * D, len(dom) * nW
    check_feasible(rows, cols, guard, knob)

    out = np.zeros((rows, cols), dtype=storage_dtype(modulus))
    pos = np.mod(products.transpose(0, 2, 1), modulus)
    neg = np.mod(-pos, modulus)

    for s, S in enumerate(dom):
        for t, i in enumerate(S):
            r = tgt.index[S[:t] + S[t+1:]]
            out[r*D:(r+1)*D, s*nW:(s+1)*nW] = neg[i] if t % 2 else pos[i]

    return MatrixFp(out, modulus)


def koszul_differential_on_sections(V, W, p, compress=True, guard=FEASIBILITY_GUARD):
    """Koszul differential L^p V (x) W -> L^(p-1) V (x) coefficients of degree deg V + deg W.

    With `compress` the target rows are restricted to the pivot coordinates of the span of the products V*W, which leaves the kernel unchanged.
    """

    products = poly_mul_table(V.basis, W.basis, V.p)

    if compress:
        products = products[:, :, target_pivots(products, V.p)]

    return assemble_koszul_matrix(products, p, V.p, guard)


def _strand_rank(V, W, p, guard, blocked_threshold, block_size, verbose):

    M = koszul_differential_on_sections(V, W, p, guard=guard)
    r = rank(M, blocked_threshold, block_size, verbose=verbose)

    return r, M.cols


def koszul_dim_twisted(curve, F, L, p, q=1, guard=FEASIBILITY_GUARD, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """dim K_{p,q}(C; F, L) for a bundle F without sections, q in {1, 2}.

    Parameters
    ----------
    curve : NodalRationalCurve
    F : LineBundleData
        must have h^0(F) = 0
    L : LineBundleData
    p : int
        the strand index
    q : int, optional
        the weight
    guard : int, optional
        refuse matrices with more entries
    verbose : bool, optional

    Returns
    -------
    int
    """

    if q not in (1, 2):
        raise ParameterError('only the weights q=1 and q=2 are supported')
    if p < 0:
        raise ParameterError('negative strand index %s' % p)
    if section_space(curve, F).dim:
        raise ParameterError(
            'F has sections; use koszul_dim_ring for the coordinate ring')

    st = time.time()
    V = section_space(curve, L)
    n = V.dim
    W1 = section_space(curve, tensor(F, L))
    args = guard, blocked_threshold, block_size, verbose

    if p > n:
        res = 0
    elif q == 1:
        r, cols = _strand_rank(V, W1, p, *args) if p else (0, W1.dim)
        res = cols - r
    else:
        W2 = section_space(curve, tensor(F, power(L, 2)))
        r_out = _strand_rank(V, W2, p, *args)[0] if p else 0
        r_in = _strand_rank(V, W1, p + 1, *args)[0] if p < n else 0
        res = comb(n, p) * W2.dim - r_out - r_in

    if verbose:
        print('[koszul_dim_twisted:]'.ljust(15, ' ') + ' K_{%s,%s} has dimension %s (%ss).' %
              (p, q, res, np.round(time.time() - st, 3)))

    return int(res)


def koszul_dim_ring(curve, L, p, q, guard=FEASIBILITY_GUARD, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """Graded Betti number b_{p,q} of the section ring of `L`, for q in {1, 2}.

    The q=1 kernel is corrected by the injective image of the pure Koszul differential, of rank C(n, p+1) for n = h^0(L). For q=2 the cokernel of the incoming map is measured against the outgoing one.
    """

    if q not in (1, 2):
        raise ParameterError('only the weights q=1 and q=2 are supported')
    if p < 0:
        raise ParameterError('negative strand index %s' % p)

    st = time.time()
    V = section_space(curve, L)
    n = V.dim
    args = guard, blocked_threshold, block_size, verbose

    if q == 1:
        if p == 0 or p >= n:
            return 0
        r, cols = _strand_rank(V, V, p, *args)
        res = cols - r - comb(n, p + 1)

    else:
        if p > n:
            return 0
        W2 = section_space(curve, power(L, 2))
        r_out = _strand_rank(V, W2, p, *args)[0] if p else 0
        r_in = _strand_rank(V, V, p + 1, *args)[0] if p < n else 0
        res = comb(n, p) * W2.dim - r_out - r_in

    if verbose:
        print('[koszul_dim_ring:]'.ljust(15, ' ') + ' b_{%s,%s} = %s (%ss).' %
              (p, q, res, np.round(time.time() - st, 3)))

    return int(res)


def betti_table_direct(curve, L, guard=FEASIBILITY_GUARD, verbose=False):
    """The three rows of the Betti table of the section ring of `L`, every entry by a direct strand computation.

    Only sensible at small genus: the strands grow like binomials in h^0(L).
    """

    from .betti import BettiTable

    n = section_space(curve, L).dim
    width = max(n - 1, 1)
    entries = np.zeros((3, width), dtype=np.int64)
    entries[0, 0] = 1

    for i in range(width):
        if i:
            entries[1, i] = koszul_dim_ring(
                curve, L, i, 1, guard=guard, verbose=verbose)
        entries[2, i] = koszul_dim_ring(
            curve, L, i, 2, guard=guard, verbose=verbose)

    return BettiTable(entries, kind='ring', g=curve.g)


def _monomial_products(V, d):
    """coefficients of every degree-d monomial in the basis of V, one column per monomial"""

    monomials = list(combinations_with_replacement(range(V.dim), d))
    width = d * V.degree + 1
    cols = np.zeros((width, len(monomials)), dtype=np.int64)

    for c, mono in enumerate(monomials):
        f = np.ones(1, dtype=np.int64)
        for i in mono:
            f = np.convolve(f, V.basis[i]) % V.p
        cols[:len(f), c] = f

    return cols, monomials


def ideal_graded_dim(curve, L, d):
    """The degree-d piece I_d of the ideal of the curve embedded by `L`, for d in {2, 3}.

    Returns
    -------
    IdealPiece
        `dim`, `basis` (MatrixFp whose columns are the elements of I_d in monomial coordinates), `monomials` (tuples of basis indices), and whether Sym^d H^0(L) -> H^0(L^d) is onto.
    """

    if d not in (2, 3):
        raise ParameterError('graded pieces are available in degree 2 and 3')

    V = section_space(curve, L)
    cols, monomials = _monomial_products(V, d)
    M = MatrixFp(cols, V.p)

    K = kernel_basis(M)
    image = rank_naive(M.a, M.p)
    surjective = image == section_space(curve, power(L, d)).dim

    return IdealPiece(K.cols, K, monomials, surjective)


def linear_syzygy_space(curve, L):
    """Linear syzygies among the quadrics: the kernel of I_2 (x) V -> Sym^3 V.

    Returns
    -------
    dim : int
    gammas : list of arrays
        each kernel element as a dim(V) x dim(I_2) matrix, entry (k, a) the coefficient of x_k (x) q_a
    """

    I2 = ideal_graded_dim(curve, L, 2)
    n = section_space(curve, L).dim
    p = curve.p
    k2 = I2.dim

    cubics = {m: c for c, m in enumerate(
        combinations_with_replacement(range(n), 3))}
    lift = np.array([[cubics[tuple(sorted(m + (k,)))] for k in range(n)]
                     for m in I2.monomials], dtype=np.int64)

    Q = I2.basis.a.astype(np.int64)
    M = np.zeros((len(cubics), n * k2), dtype=np.int64)
    for k in range(n):
        for a in range(k2):
            np.add.at(M[:, k * k2 + a], lift[:, k], Q[:, a])

    K = kernel_basis(MatrixFp(M, p))
    gammas = [K.a[:, c].astype(np.int64).reshape(n, k2) for c in range(K.cols)]

    return K.cols, gammas


def syzygy_rank(gamma, p):
    """number of independent linear forms in the syzygy `gamma`"""

    gamma = np.mod(np.asarray(gamma, dtype=np.int64), p)
    if not gamma.any():
        raise ParameterError('the zero syzygy has no rank')

    return int(rank_naive(gamma, p))


def _perm_sign(seq):

    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)

    return -1 if inversions % 2 else 1


def middle_pairing_matrix(m):
    """The pairing psi(y_I, y_J) on L^(m+1) V for 2m+1 variables, as an (N, N, 2m+1) array of linear-form coefficients"""

    n = 2 * m + 1
    basis = WedgeBasis(n, m + 1)
    psi = np.zeros((len(basis), len(basis), n), dtype=np.int64)

    for a, I in enumerate(basis):
        for b, J in enumerate(basis):
            common = set(I) & set(J)
            if len(common) != 1:
                continue
            c = common.pop()
            t = I.index(c)
            rest = I[:t] + I[t+1:]
            psi[a, b, c] = (-1)**t * _perm_sign(rest + J)

    return psi


def middle_koszul_symmetry_check(m):
    """Symmetric for even m, skew-symmetric with zero diagonal for odd m"""

    if m < 1:
        raise ParameterError('m must be at least 1')

    psi = middle_pairing_matrix(m)
    flipped = psi.transpose(1, 0, 2)

    symmetric = bool(np.array_equal(psi, flipped))
    skew = bool(np.array_equal(psi, -flipped))
    zero_diagonal = not np.einsum('iic->ic', psi).any()

    if m % 2:
        holds = skew and not symmetric and zero_diagonal
    else:
        holds = symmetric and not skew

    return SymmetryVerdict(m, symmetric, skew, zero_diagonal, 'skew' if m % 2 else 'symmetric', holds)


def random_basis_change(S, rng):
    """`S` with its basis replaced by a random invertible recombination"""
    return S.recombine(random_invertible(S.dim, S.p, rng))
