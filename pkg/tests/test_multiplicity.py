"""Tests for composition multiplicities, inverses, and graded partitions."""

from fractions import Fraction

import pytest

from weylkl.rootdata import RationalCoweight, build_root_datum
from weylkl.coxeter import bruhat_leq
from weylkl.endoscopy import stratify
from weylkl.multiplicity import (
    graded_partition_polynomial,
    graded_partition_series,
    index_highest_weights,
    inverse_multiplicity_matrix,
    multiplicity,
    multiplicity_matrix,
    multiplicity_polynomial,
    simple_module_dimension,
    simple_weight_multiplicity,
)

A2 = build_root_datum("A", 2)
B2 = build_root_datum("B", 2)


def test_regular_integral_a2_matrix_is_bruhat_indicator():
    strat = stratify(A2, RationalCoweight((1, 1), 1))
    matrix = multiplicity_matrix(strat)
    for i, w in enumerate(strat.index_set):
        for j, y in enumerate(strat.index_set):
            assert matrix[i][j] == (1 if bruhat_leq(w, y) else 0)


def test_highest_weights_a2_rho():
    strat = stratify(A2, RationalCoweight((1, 1), 1))
    weights = index_highest_weights(strat)
    assert weights[0] == (0, 0)
    assert weights[-1] == (-2, -2)  # lowest: w0(rho) - rho = -2 rho
    assert len(set(weights)) == 6


def test_matrix_unitriangular_and_inverse():
    for datum, lam in [
        (A2, RationalCoweight((1, 1), 1)),
        (A2, RationalCoweight((2, 1), 3)),
        (B2, RationalCoweight((3, 2), 2)),
        (B2, RationalCoweight((4, 3), 2)),
    ]:
        strat = stratify(datum, lam)
        matrix = multiplicity_matrix(strat)
        size = len(matrix)
        for i in range(size):
            assert matrix[i][i] == 1
            for j in range(i):
                assert matrix[i][j] == 0
        inverse = inverse_multiplicity_matrix(strat)
        for i in range(size):
            for j in range(size):
                total = sum(matrix[i][k] * inverse[k][j] for k in range(size))
                assert total == (1 if i == j else 0)


def test_singular_block_multiplicities():
    strat = stratify(A2, RationalCoweight((2, 1), 3))
    assert len(strat.index_set) == 3
    matrix = multiplicity_matrix(strat)
    assert matrix == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_multiplicity_polynomial_values():
    strat = stratify(A2, RationalCoweight((1, 1), 1))
    e = strat.index_set[0]
    top = strat.index_set[-1]
    assert multiplicity_polynomial(strat, e, top) == (1,)
    assert multiplicity(strat, e, top) == 1
    assert multiplicity(strat, top, e) == 0
    # for a singular block the index set is a proper subset of the group:
    # elements outside it are rejected
    sing = stratify(A2, RationalCoweight((2, 1), 3))
    assert len(sing.index_set) == 3
    outside = sing.system.element((1, 2, 1))  # longest element, not a coset rep
    assert outside not in sing.index_set
    with pytest.raises(ValueError):
        multiplicity_polynomial(sing, sing.index_set[0], outside)


def test_dimensions_via_alternating_sums():
    # trivial module
    assert simple_module_dimension(stratify(A2, RationalCoweight((1, 1), 1))) == 1
    # first fundamental representation of the dual (3-dimensional)
    assert simple_module_dimension(stratify(A2, RationalCoweight((5, 4), 3))) == 3
    # adjoint (8-dimensional)
    assert simple_module_dimension(stratify(A2, RationalCoweight((2, 2), 1))) == 8
    # B2: standard four-dimensional representation of the dual (sp4) side;
    # Weyl dimension formula: (2/1)*(1/1)*(3/2)*(4/3) = 4
    strat = stratify(B2, RationalCoweight((3, 2), 1))  # lam = rho + first fundamental
    assert simple_module_dimension(strat) == 4


def test_weight_multiplicities_adjoint():
    strat = stratify(A2, RationalCoweight((2, 2), 1))
    y = strat.minimal_mover
    assert simple_weight_multiplicity(strat, y, (1, 1)) == 1
    assert simple_weight_multiplicity(strat, y, (0, 0)) == 2
    assert simple_weight_multiplicity(strat, y, (2, 1)) == 0
    assert simple_weight_multiplicity(strat, y, (-1, -1)) == 1


def test_weight_multiplicity_requires_integrality():
    strat = stratify(A2, RationalCoweight((1, 1), 2))
    with pytest.raises(ValueError):
        simple_weight_multiplicity(strat, strat.minimal_mover, (0, 0))


def test_graded_partition_polynomial_basics():
    vectors = ((1, 0), (0, 1), (1, 1))
    assert graded_partition_polynomial(vectors, (0, 0)) == (1,)
    # (1,1) = (1,1) [one part] or (1,0)+(0,1) [two parts]
    assert graded_partition_polynomial(vectors, (1, 1)) == (0, 1, 1)
    assert graded_partition_polynomial(vectors, (-1, 0)) == ()
    assert graded_partition_polynomial(vectors, (Fraction(1, 2), 0)) == ()


@pytest.mark.parametrize("datum,height", [(A2, 6), (B2, 6)])
def test_graded_partition_identity(datum, height):
    """Sum of K_alpha(q) e^alpha against the geometric-series product."""
    vectors = datum.positive_coroots
    series = graded_partition_series(vectors, height)
    assert series[tuple([0] * datum.rank)] == (1,)
    for expo, poly in series.items():
        assert graded_partition_polynomial(vectors, expo) == poly
    # and nothing of small height is missed by the product expansion
    for expo, poly in series.items():
        assert sum(expo) <= height


def test_verma_weight_dimension_is_partition_count():
    strat = stratify(A2, RationalCoweight((1, 1), 1))
    weights = index_highest_weights(strat)
    matrix = multiplicity_matrix(strat)
    coroots = A2.positive_coroots
    # dim M(hw)_nu = K(hw - nu); check through the composition series:
    # sum over y of [M(w):L(y)] * dim L(y)_nu must equal the partition count
    for i, w in enumerate(strat.index_set):
        hw = weights[i]
        for nu in [(0, 0), (-1, 0), (-1, -1), (-2, -1)]:
            verma_dim = sum(graded_partition_polynomial(
                coroots, tuple(h - x for h, x in zip(hw, nu))))
            total = 0
            for j, y in enumerate(strat.index_set):
                if matrix[i][j]:
                    total += matrix[i][j] * simple_weight_multiplicity(strat, y, nu)
            assert total == verma_dim, (w.word_labels, nu)
