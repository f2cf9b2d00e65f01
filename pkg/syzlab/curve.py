#!/bin/python
# -*- coding: utf-8 -*-

"""rational g-nodal curves over F_p, line bundles given by gluing multipliers, and their section spaces

The curve is P^1 with p_j glued to q_j for j = 1..g. A line bundle of degree d with multipliers (a_1..a_g) has as sections the polynomials f of degree at most d with a_j f(p_j) = f(q_j).
"""

import json
import numpy as np
from collections import namedtuple
from .ff import FieldParams, ParameterError, SplitMix64, inv
from .linalg import MatrixFp, kernel_basis, echelon
from .poly import vandermonde_rows, poly_mul_table


class LineBundleData(namedtuple('LineBundleData', 'degree multipliers p')):
    """Degree and per-node multipliers of a line bundle on a nodal rational curve.
    """

    __slots__ = ()

    def __new__(cls, degree, multipliers, p):

        mults = tuple(int(a) % int(p) for a in multipliers)
        if not all(mults):
            raise ParameterError('multipliers must be nonzero mod %s' % p)

        return super(LineBundleData, cls).__new__(cls, int(degree), mults, int(p))

    def to_dict(self):
        return {'degree': self.degree, 'multipliers': list(self.multipliers)}


class NodalRationalCurve(dict):
    """A rational g-nodal curve: the 2g distinct affine points (p_j, q_j) together with its field.

    The dict holds `g`, `field`, `nodes` and a registry of named `bundles`.
    """

    def __init__(self, g, field, nodes):

        g = int(g)
        nodes = np.array(nodes, dtype=np.int64).reshape(g, 2) % field.p

        if g < 2:
            raise ParameterError('genus must be at least 2, got %s' % g)
        if field.p <= 2 * g:
            raise ParameterError(
                'p=%s is too small for %s distinct points' % (field.p, 2 * g))
        if len(np.unique(nodes)) != 2 * g:
            raise ParameterError('the 2g node preimages must be distinct')

        super(NodalRationalCurve, self).__init__(
            g=g, field=field, nodes=nodes, bundles={})

    def __repr__(self):
        return "A rational %s-nodal curve over F_%s." % (self.g, self.p)

    @property
    def g(self):
        return self['g']

    @property
    def field(self):
        return self['field']

    @property
    def p(self):
        return self['field'].p

    @property
    def nodes(self):
        return self['nodes']

    @property
    def ps(self):
        return self['nodes'][:, 0]

    @property
    def qs(self):
        return self['nodes'][:, 1]

    @property
    def bundles(self):
        return self['bundles']

    def to_json(self, **kwargs):

        doc = self.field.to_dict()
        doc['g'] = self.g
        doc['nodes'] = self.nodes.tolist()
        doc['bundles'] = {name: b.to_dict()
                          for name, b in self.bundles.items()}

        return json.dumps(doc, **kwargs)

    @classmethod
    def from_json(cls, text):

        doc = json.loads(text)
        field = FieldParams(doc['p'], doc['ell'], doc['r'])
        curve = cls(doc['g'], field, doc['nodes'])
        for name, b in doc.get('bundles', {}).items():
            curve.bundles[name] = LineBundleData(
                b['degree'], b['multipliers'], field.p)

        return curve


class SectionSpace(object):
    """Basis of H^0 of a line bundle. Rows of `basis` are coefficient vectors of length degree+1.
    """

    def __init__(self, curve, bundle, basis):

        self.curve = curve
        self.bundle = bundle
        self.basis = np.asarray(basis, dtype=np.int64)

    @property
    def p(self):
        return self.curve.p

    @property
    def degree(self):
        return self.bundle.degree

    @property
    def dim(self):
        return self.basis.shape[0]

    def recombine(self, G):
        """same space, basis replaced by G @ basis for an invertible MatrixFp `G`"""
        return SectionSpace(self.curve, self.bundle, (G.a.astype(np.int64) @ self.basis) % self.p)

    def __repr__(self):
        return 'SectionSpace(dim %s, degree %s)' % (self.dim, self.degree)


def random_curve(g, field, seed):
    """Draw 2g pairwise distinct points of F_p from a SplitMix64 stream seeded with `seed`.

    Values are drawn by plain modulo reduction and rejected when already taken. They are assigned in the order p_1, q_1, p_2, q_2, ...
    """

    if field.p <= 2 * g:
        raise ParameterError(
            'p=%s is too small for a rational %s-nodal curve' % (field.p, g))

    rng = SplitMix64(seed)
    vals = []
    while len(vals) < 2 * g:
        x = rng.below(field.p)
        if x not in vals:
            vals.append(x)

    return NodalRationalCurve(g, field, vals)


def trivial_bundle(curve):
    return LineBundleData(0, (1,) * curve.g, curve.p)


def canonical_multipliers(curve):
    """The dualizing sheaf: degree 2g-2 with a_j = prod_{i != j} (q_j-p_i)(q_j-q_i) / ((p_j-p_i)(p_j-q_i))"""

    p = curve.p
    ps, qs = [int(x) for x in curve.ps], [int(x) for x in curve.qs]
    mults = []

    for j in range(curve.g):
        num, den = 1, 1
        for i in range(curve.g):
            if i == j:
                continue
            num = num * (qs[j] - ps[i]) * (qs[j] - qs[i]) % p
            den = den * (ps[j] - ps[i]) * (ps[j] - qs[i]) % p
        mults.append(num * inv(den, p) % p)

    return LineBundleData(2 * curve.g - 2, mults, p)


def tensor(A, B):

    if A.p != B.p or len(A.multipliers) != len(B.multipliers):
        raise ParameterError('bundles live on different curves')

    return LineBundleData(A.degree + B.degree, [a * b for a, b in zip(A.multipliers, B.multipliers)], A.p)


def dual(A):
    return LineBundleData(-A.degree, [inv(a, A.p) for a in A.multipliers], A.p)


def power(A, k):

    k = int(k)
    base = A if k >= 0 else dual(A)

    return LineBundleData(abs(k) * base.degree, [pow(a, abs(k), A.p) for a in base.multipliers], A.p)


def torsion_bundle(curve, field=None, support=None):
    """Degree-0 bundle with multiplier r on the nodes in `support` (1-based, default all) and 1 elsewhere"""

    field = field or curve.field
    g = curve.g

    if support is None:
        support = range(1, g + 1)
    support = sorted(set(int(j) for j in support))

    if not support:
        raise ParameterError('empty support gives the trivial bundle')
    if support[0] < 1 or support[-1] > g:
        raise ParameterError('support must lie in 1..%s' % g)

    mults = [field.r if j + 1 in support else 1 for j in range(g)]

    return LineBundleData(0, mults, field.p)


def is_torsion(A, field):
    """degree 0 and every multiplier an ell-th root of unity"""
    return A.degree == 0 and all(pow(a, field.ell, field.p) == 1 for a in A.multipliers)


def paracanonical(curve, eta):
    """K (x) eta"""
    return tensor(canonical_multipliers(curve), eta)


def random_bundle(curve, degree, rng):
    """bundle of the given degree with multipliers drawn from F_p^*"""
    return LineBundleData(degree, [rng.nonzero(curve.p) for _ in range(curve.g)], curve.p)


def constraint_matrix(curve, bundle):
    """the g x (d+1) system a_j f(p_j) - f(q_j) = 0"""

    p, d = curve.p, bundle.degree
    a = np.array(bundle.multipliers, dtype=np.int64)

    return MatrixFp(a[:, None] * vandermonde_rows(curve.ps, d, p) - vandermonde_rows(curve.qs, d, p), p)


def section_space(curve, bundle):
    """Basis of H^0(C, bundle) in reduced echelon form.

    Parameters
    ----------
    curve : NodalRationalCurve
    bundle : LineBundleData

    Returns
    -------
    SectionSpace
    """

    if bundle.degree < 0:
        return SectionSpace(curve, bundle, np.zeros((0, 0), dtype=np.int64))

    K = kernel_basis(constraint_matrix(curve, bundle))
    R, _ = echelon(K.T)

    return SectionSpace(curve, bundle, R.a)


def multiplication_matrix(V, W):
    """Matrix of V (x) W -> coefficients of degree deg V + deg W. Column i*dim(W) + j holds V_i * W_j.
    """

    if V.curve is not W.curve and not np.array_equal(V.curve.nodes, W.curve.nodes):
        raise ParameterError('section spaces live on different curves')

    P = poly_mul_table(V.basis, W.basis, V.p)
    D = V.degree + W.degree + 1

    return MatrixFp(P.reshape(V.dim * W.dim, D).T, V.p)
