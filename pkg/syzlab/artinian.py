#!/bin/python
# -*- coding: utf-8 -*-

"""artinian reductions of the canonical module and of the torsion module by a regular pair of sections

Cutting a Cohen-Macaulay module down by two general linear forms keeps its graded Betti numbers and leaves a module with only two or three graded pieces, so a whole Koszul strand collapses to one matrix with entries in the ground field.
"""

import time
import numpy as np
from .ff import ParameterError, SplitMix64
from .linalg import MatrixFp, echelon, quotient_coordinates, rank, rank_naive, mulmod, BLOCKED_THRESHOLD, BLOCK_SIZE
from .poly import poly_gcd, poly_degree, poly_mul_table
from .curve import section_space, canonical_multipliers, tensor, power
from .koszul import assemble_koszul_matrix, random_basis_change, ARTINIAN_GUARD

REGULAR_PAIR_ATTEMPTS = 32


class RegularPairError(RuntimeError):
    pass


class ArtinianReduction(dict):
    """Result of cutting a module down by the last two sections of a basis of H^0(K (x) eta).

    Holds the `kind` ('omega_R' or 'torsion_module'), the `regular_pair` indices, the recombined `sections`, the `hilbert` values in degrees 0, 1, 2, the `image_dims` of the two ideal pieces, and the `products` array feeding the Koszul matrix.
    """

    def __repr__(self):
        return 'ArtinianReduction(%s, hilbert %s)' % (self.kind, self.hilbert)

    @property
    def kind(self):
        return self['kind']

    @property
    def regular_pair(self):
        return self['regular_pair']

    @property
    def sections(self):
        return self['sections']

    @property
    def hilbert(self):
        return self['hilbert']

    @property
    def image_dims(self):
        return self['image_dims']

    @property
    def products(self):
        return self['products']

    @property
    def strand(self):
        return self['strand']


def is_regular_pair(f, h, p):
    """no common zero on P^1: constant gcd, and not both of degree below the bound"""

    top = len(f) - 1
    if top < 0 or (not f[top] and not h[top]):
        return False

    return poly_degree(poly_gcd(f, h, p)) == 0


def choose_regular_pair(V, seed=0, attempts=REGULAR_PAIR_ATTEMPTS):
    """Make the last two sections of a basis of `V` a regular pair.

    The given basis is tried first. After that the basis is replaced by random invertible recombinations drawn from SplitMix64(seed + attempt).

    Parameters
    ----------
    V : SectionSpace
        at least two-dimensional
    seed : int, optional
    attempts : int, optional
        number of recombinations before giving up

    Returns
    -------
    pair : tuple
        the indices (dim V - 2, dim V - 1)
    sections : SectionSpace
        `V` with the accepted basis
    """

    n = V.dim
    if n < 2:
        raise ParameterError('a regular pair needs two sections, got %s' % n)

    cand = V
    for attempt in range(attempts + 1):
        if is_regular_pair(cand.basis[n-2], cand.basis[n-1], V.p):
            return (n - 2, n - 1), cand
        cand = random_basis_change(V, SplitMix64(seed + attempt))

    raise RegularPairError(
        '[choose_regular_pair:] no regular pair after %s recombinations.' % attempts)


def graded_piece_map(H, U):
    """Coordinates on the quotient span(H)/span(U).

    Parameters
    ----------
    H : MatrixFp
        rows are a basis of the ambient section space, in raw coefficients
    U : MatrixFp
        rows span the subspace to divide out

    Returns
    -------
    MatrixFp
        (dim H/U) x (coefficient length) map whose kernel on span(H) is span(U)
    """

    p = H.p
    Q = quotient_coordinates(U.T)
    QH = MatrixFp(mulmod(Q.a, H.a.T, p), p)
    _, rows = echelon(QH.T)

    return MatrixFp(Q.a[rows], p)


def _check_eta(eta):
    if eta.degree == 0 and all(a == 1 for a in eta.multipliers):
        raise ParameterError('eta must be a nontrivial torsion bundle')


def _prepare(curve, eta, seed, attempts):

    g = curve.g
    if g % 2:
        raise ParameterError(
            'the artinian pipelines need even genus, got %s' % g)
    _check_eta(eta)

    L = tensor(canonical_multipliers(curve), eta)
    V = section_space(curve, L)
    if V.dim != g - 1:
        raise RegularPairError(
            'h^0(K (x) eta) = %s instead of %s' % (V.dim, g - 1))
    pair, V = choose_regular_pair(V, seed, attempts)

    return L, pair, V


def _ideal_piece(V, pair, M, N):
    """quotient coordinates of N modulo s_a * M for the pair a, together with the image dimension"""

    U = poly_mul_table(V.basis[list(pair)], M.basis, V.p)
    U = U.reshape(-1, U.shape[-1])
    A = graded_piece_map(MatrixFp(N.basis, V.p), MatrixFp(U, V.p))

    return A, rank_naive(U, V.p)


def artinian_reduce_omega(curve, eta, seed=0, attempts=REGULAR_PAIR_ATTEMPTS, verbose=False):
    """Artinian reduction of the canonical module of the paracanonical curve.

    Parameters
    ----------
    curve : NodalRationalCurve
        of even genus g
    eta : LineBundleData
        nontrivial torsion bundle
    seed : int, optional
        drives the regular pair retries

    Returns
    -------
    ArtinianReduction
        with Hilbert values (g, g-3, 1) and products of shape (g-3, g, g-3)
    """

    st = time.time()
    g, p = curve.g, curve.p
    L, pair, V = _prepare(curve, eta, seed, attempts)

    K = canonical_multipliers(curve)
    A0 = section_space(curve, K)
    H1 = section_space(curve, tensor(K, L))
    H2 = section_space(curve, tensor(K, power(L, 2)))

    A1map, im1 = _ideal_piece(V, pair, A0, H1)
    A2map, im2 = _ideal_piece(V, pair, H1, H2)
    hilbert = (A0.dim, A1map.rows, A2map.rows)

    if hilbert != (g, g - 3, 1):
        raise RegularPairError(
            '[artinian_reduce_omega:] Hilbert values %s instead of %s.' % (hilbert, (g, g - 3, 1)))

    kept = V.basis[:pair[0]]
    raw = poly_mul_table(kept, A0.basis, p)
    products = mulmod(raw.reshape(-1, raw.shape[-1]), A1map.a.T, p).reshape(len(kept), g, g - 3)

    if verbose:
        print('[artinian_reduce_omega:]'.ljust(15, ' ') + ' Hilbert values %s, reduction took %ss.' %
              (hilbert, np.round(time.time() - st, 3)))

    return ArtinianReduction(kind='omega_R', regular_pair=pair, sections=V, hilbert=hilbert,
                             image_dims=(im1, im2), products=products, strand=g // 2)


def artinian_reduce_torsion(curve, eta, k, seed=0, attempts=REGULAR_PAIR_ATTEMPTS, verbose=False):
    """Artinian reduction of the module of sections of eta^k (x) (K (x) eta)^q, q >= 0.

    Hilbert values are (0, g-1, g-1). The products map s_i * m_b to the degree-2 piece.
    """

    st = time.time()
    g, p = curve.g, curve.p
    L, pair, V = _prepare(curve, eta, seed, attempts)

    M1 = section_space(curve, tensor(power(eta, k), L))
    M2 = section_space(curve, tensor(power(eta, k), power(L, 2)))

    B2map, im = _ideal_piece(V, pair, M1, M2)
    hilbert = (section_space(curve, power(eta, k)).dim, M1.dim, B2map.rows)

    if hilbert != (0, g - 1, g - 1):
        raise RegularPairError(
            '[artinian_reduce_torsion:] Hilbert values %s instead of %s.' % (hilbert, (0, g - 1, g - 1)))

    kept = V.basis[:pair[0]]
    raw = poly_mul_table(kept, M1.basis, p)
    products = mulmod(raw.reshape(-1, raw.shape[-1]), B2map.a.T, p).reshape(len(kept), g - 1, g - 1)

    if verbose:
        print('[artinian_reduce_torsion:]'.ljust(15, ' ') + ' Hilbert values %s, reduction took %ss.' %
              (hilbert, np.round(time.time() - st, 3)))

    return ArtinianReduction(kind='torsion_module', regular_pair=pair, sections=V, hilbert=hilbert,
                             image_dims=(0, im), products=products, strand=g // 2 - 1)


def reduced_koszul_corank(red, guard=ARTINIAN_GUARD, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """corank of the field-valued Koszul matrix of a reduction"""

    M = assemble_koszul_matrix(red.products, red.strand,
                               red.sections.p, guard, 'artinian_guard')
    r = rank(M, blocked_threshold, block_size, verbose=verbose)

    return int(M.cols - r), M.shape


def prym_green_kernel_dim(curve, eta, seed=0, attempts=REGULAR_PAIR_ATTEMPTS, guard=ARTINIAN_GUARD, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """dim K_{g/2-2,1}(C, K (x) eta) through the artinian reduction of the canonical module.

    The matrix is L^(g/2) V' (x) A_0 -> L^(g/2-1) V' (x) A_1 of shape (g-3)C(g-3, g/2-1) x gC(g-3, g/2), where V' is spanned by the g-3 sections outside the regular pair.
    """

    st = time.time()
    red = artinian_reduce_omega(curve, eta, seed, attempts, verbose)
    corank, shape = reduced_koszul_corank(
        red, guard, blocked_threshold, block_size, verbose)

    if verbose:
        print('[prym_green_kernel_dim:]'.ljust(15, ' ') + ' corank %s of a %s x %s matrix (%ss).' %
              (corank, shape[0], shape[1], np.round(time.time() - st, 3)))

    return corank


def torsion_module_kernel_dim(curve, eta, k, ell=None, seed=0, attempts=REGULAR_PAIR_ATTEMPTS, guard=ARTINIAN_GUARD, blocked_threshold=BLOCKED_THRESHOLD, block_size=BLOCK_SIZE, verbose=False):
    """dim K_{g/2-1,1}(C; eta^k, K (x) eta) as the corank of a square matrix of size (g-1)C(g-3, g/2-1).
    """

    ell = ell or curve.field.ell
    if not 1 <= k <= ell - 2:
        raise ParameterError(
            'k=%s is outside 1..%s for level %s' % (k, ell - 2, ell))

    st = time.time()
    red = artinian_reduce_torsion(curve, eta, k, seed, attempts, verbose)
    corank, shape = reduced_koszul_corank(
        red, guard, blocked_threshold, block_size, verbose)

    if verbose:
        print('[torsion_module_kernel_dim:]'.ljust(15, ' ') + ' corank %s of a %s x %s matrix (%ss).' %
              (corank, shape[0], shape[1], np.round(time.time() - st, 3)))

    return corank
