#!/bin/python
# -*- coding: utf-8 -*-

import numpy as np
import pytest
from syzlab.ff import FieldParams, ParameterError, SplitMix64
from syzlab.linalg import kernel_basis
from syzlab.curve import (LineBundleData, NodalRationalCurve, canonical_multipliers, constraint_matrix, dual, is_torsion,
                          multiplication_matrix, paracanonical, power, random_bundle, random_curve, section_space, tensor,
                          torsion_bundle, trivial_bundle)


def test_canonical_multipliers_by_hand(tiny_curve):

    K = canonical_multipliers(tiny_curve)
    assert K.degree == 2
    assert K.multipliers == (5, 3)


def test_random_curve_is_seeded(field3):

    a, b = random_curve(7, field3, 11), random_curve(7, field3, 11)
    assert np.array_equal(a.nodes, b.nodes)
    assert len(np.unique(a.nodes)) == 14
    assert not np.array_equal(a.nodes, random_curve(7, field3, 12).nodes)


def test_curve_validation(field3):

    with pytest.raises(ParameterError):
        NodalRationalCurve(2, FieldParams(7, 2, 6), [0, 1, 1, 3])
    with pytest.raises(ParameterError):
        random_curve(4, FieldParams(7, 2, 6), 0)


@pytest.mark.parametrize('g', [3, 6, 9])
def test_riemann_roch(g, field3):

    curve = random_curve(g, field3, g)
    K = canonical_multipliers(curve)
    eta = torsion_bundle(curve)

    assert section_space(curve, K).dim == g
    assert section_space(curve, paracanonical(curve, eta)).dim == g - 1
    assert section_space(curve, trivial_bundle(curve)).dim == 1
    assert section_space(curve, eta).dim == 0
    assert section_space(curve, dual(K)).dim == 0

    A = random_bundle(curve, 2 * g, SplitMix64(5))
    assert section_space(curve, A).dim == g + 1


def test_sections_satisfy_the_gluing(field3):

    curve = random_curve(5, field3, 1)
    L = paracanonical(curve, torsion_bundle(curve))
    V = section_space(curve, L)
    C = constraint_matrix(curve, L)
    assert not (C.a.astype(np.int64) @ V.basis.T % curve.p).any()


def test_bundle_arithmetic(field3):

    curve = random_curve(4, field3, 2)
    eta = torsion_bundle(curve, support=[1, 3])
    assert eta.multipliers[1] == 1 and eta.multipliers[0] == field3.r
    assert is_torsion(eta, field3)
    assert power(eta, 3).multipliers == (1,) * 4
    assert tensor(eta, dual(eta)) == trivial_bundle(curve)
    assert power(eta, -1) == dual(eta)

    with pytest.raises(ParameterError):
        torsion_bundle(curve, support=[])
    with pytest.raises(ParameterError):
        LineBundleData(0, [1, 0], 7)


def test_multiplication_matrix(field3):

    curve = random_curve(4, field3, 3)
    V = section_space(curve, canonical_multipliers(curve))
    M = multiplication_matrix(V, V)
    assert M.shape == (2 * 6 + 1, 16)
    # symmetric products give identical columns
    assert np.array_equal(M.a[:, 1], M.a[:, 4])


def test_json_layout(field3):

    curve = random_curve(3, field3, 4)
    curve.bundles['eta'] = torsion_bundle(curve)
    back = NodalRationalCurve.from_json(curve.to_json())
    assert np.array_equal(back.nodes, curve.nodes)
    assert back.field == field3
    assert back.bundles['eta'] == curve.bundles['eta']


def test_swapping_the_node_preimages_inverts_the_multipliers(field3):

    curve = random_curve(6, field3, 7)
    swapped = NodalRationalCurve(6, field3, curve.nodes[:, ::-1])
    a = canonical_multipliers(curve).multipliers
    b = canonical_multipliers(swapped).multipliers
    assert all(x * y % field3.p == 1 for x, y in zip(a, b))


def test_products_glue_like_the_tensor_product(field3):

    curve = random_curve(5, field3, 8)
    K = canonical_multipliers(curve)
    L = paracanonical(curve, torsion_bundle(curve))
    M = multiplication_matrix(section_space(curve, K), section_space(curve, L))
    C = constraint_matrix(curve, tensor(K, L))
    assert M.cols == 5 * 4
    assert not (C @ M).a.any()


def test_quadrics_of_genus_ten(setup):

    _, curve, eta, L = setup(10, 3)
    M = multiplication_matrix(section_space(curve, L), section_space(curve, L))
    assert M.shape == (37, 81)
    assert kernel_basis(M).cols == 54


def test_riemann_roch_for_random_bundles(field3):

    g = 5
    curve = random_curve(g, field3, 9)
    rng = SplitMix64(10)
    for _ in range(50):
        d = 2 * g - 1 + rng.below(g + 2)
        A = random_bundle(curve, d, rng)
        assert section_space(curve, A).dim == d - g + 1
