"""Tests for diagram-automorphism folding."""

import random
from fractions import Fraction

import pytest

from weylkl.rootdata import build_root_datum
from weylkl.folding import (
    UntwistClass,
    coinvariant_map_a,
    fold,
    untwist_classify,
)

A2 = build_root_datum("A", 2)
A3 = build_root_datum("A", 3)
A4 = build_root_datum("A", 4)
A5 = build_root_datum("A", 5)
D4 = build_root_datum("D", 4)
D5 = build_root_datum("D", 5)
E6 = build_root_datum("E", 6)

FLIP_A3 = (3, 2, 1)
FLIP_A5 = (5, 4, 3, 2, 1)
TRIALITY_D4 = (3, 2, 4, 1)
SWAP_D5 = (1, 2, 3, 5, 4)
FLIP_E6 = (6, 2, 5, 4, 3, 1)


def test_identity_folding():
    fd = fold(A2, (1, 2))
    assert fd.d == 1
    assert fd.orbits == ((1,), (2,))
    assert fd.d_i == (1, 1)
    assert not fd.twisted_nonreduced
    assert fd.invariant_cartan == A2.cartan_matrix
    assert fd.folded.cartan_type == "A" and fd.folded.rank == 2
    assert fd.folded_nodes == (0, 1)


def test_a3_flip_folds_to_c2():
    fd = fold(A3, FLIP_A3)
    assert fd.d == 2
    assert fd.orbits == ((1, 3), (2,))
    assert fd.d_i == (2, 1)
    assert fd.invariant_cartan == ((2, -2), (-1, 2))
    assert fd.folded.cartan_type == "C" and fd.folded.rank == 2
    # Langlands dual side: type B, with the orbit sizes as the d_i
    assert fd.dual_cartan == ((2, -1), (-2, 2))
    assert fd.dual_folded.cartan_type == "B"
    assert fd.orbit_index == (1, 2, 1)


def test_a5_flip_folds_to_c3():
    fd = fold(A5, FLIP_A5)
    assert fd.orbits == ((1, 5), (2, 4), (3,))
    assert fd.d_i == (2, 2, 1)
    assert fd.invariant_cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert fd.folded.cartan_type == "C" and fd.folded.rank == 3
    assert fd.dual_folded.cartan_type == "B"


def test_d4_triality_folds_to_g2():
    fd = fold(D4, TRIALITY_D4)
    assert fd.d == 3
    assert fd.orbits == ((1, 3, 4), (2,))
    assert fd.d_i == (3, 1)
    assert fd.invariant_cartan == ((2, -3), (-1, 2))
    assert fd.folded.cartan_type == "G"


def test_d5_swap_folds_to_b4():
    fd = fold(D5, SWAP_D5)
    assert fd.d == 2
    assert fd.orbits == ((1,), (2,), (3,), (4, 5))
    assert fd.d_i == (1, 1, 1, 2)
    assert fd.invariant_cartan == (
        (2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -2, 2))
    assert fd.folded.cartan_type == "B" and fd.folded.rank == 4
    assert fd.dual_folded.cartan_type == "C"


def test_e6_flip_folds_to_f4():
    fd = fold(E6, FLIP_E6)
    assert fd.d == 2
    assert fd.orbits == ((1, 6), (2,), (3, 5), (4,))
    assert fd.d_i == (2, 1, 2, 1)
    assert fd.folded.cartan_type == "F" and fd.folded.rank == 4
    # the node map realizes the folded Cartan inside the built F4
    built = fd.folded.cartan_matrix
    pi = fd.folded_nodes
    m = 4
    for i in range(m):
        for j in range(m):
            assert fd.invariant_cartan[i][j] == built[pi[i]][pi[j]]


def test_dual_is_transpose():
    for datum, sigma in ((A3, FLIP_A3), (A5, FLIP_A5), (D4, TRIALITY_D4),
                         (D5, SWAP_D5), (E6, FLIP_E6)):
        fd = fold(datum, sigma)
        m = len(fd.orbits)
        for i in range(m):
            for j in range(m):
                assert fd.dual_cartan[i][j] == fd.invariant_cartan[j][i]
        # dual node map realizes the dual Cartan inside the built dual datum
        built = fd.dual_folded.cartan_matrix
        pi = fd.dual_nodes
        for i in range(m):
            for j in range(m):
                assert fd.dual_cartan[i][j] == built[pi[i]][pi[j]]
        assert fd.d == max(fd.d_i)


def test_even_a_flip_is_flagged():
    fd = fold(A4, (4, 3, 2, 1))
    assert fd.twisted_nonreduced
    assert fd.d == 2
    assert fd.d_i == (2, 2)
    assert fd.folded is None and fd.invariant_cartan is None
    fd2 = fold(A2, (2, 1))
    assert fd2.twisted_nonreduced


def test_rejections():
    with pytest.raises(ValueError):
        fold(A3, (2, 1, 3))  # swaps non-symmetric nodes
    with pytest.raises(ValueError):
        fold(build_root_datum("B", 2), (1, 2))  # not simply laced
    with pytest.raises(ValueError):
        fold(A3, (1, 1, 2))  # not a permutation


def test_coinvariant_map_values():
    fd = fold(A3, FLIP_A3)
    assert coinvariant_map_a(fd, (1, 0, 0)) == (1, 0, 1)
    assert coinvariant_map_a(fd, (0, 0, 0)) == (0, 0, 0)
    # sigma-fixed vectors are multiplied by the order
    assert coinvariant_map_a(fd, (1, 2, 1)) == (2, 4, 2)
    fd4 = fold(D4, TRIALITY_D4)
    assert coinvariant_map_a(fd4, (0, 1, 0, 0)) == (0, 3, 0, 0)
    with pytest.raises(ValueError):
        coinvariant_map_a(fd, (1, 0))


def _apply(sigma, vec):
    out = [0] * len(vec)
    for i, v in enumerate(vec):
        out[sigma[i] - 1] = v
    return tuple(out)


def test_coinvariant_map_well_defined():
    rng = random.Random(7)
    for datum, sigma in ((A3, FLIP_A3), (D4, TRIALITY_D4), (E6, FLIP_E6)):
        fd = fold(datum, sigma)
        for _ in range(100):
            alpha = tuple(rng.randint(-5, 5) for _ in range(datum.rank))
            beta = tuple(rng.randint(-5, 5) for _ in range(datum.rank))
            shifted = tuple(
                a + s - b
                for a, s, b in zip(alpha, _apply(fd.sigma, beta), beta))
            image = coinvariant_map_a(fd, alpha)
            assert coinvariant_map_a(fd, shifted) == image
            # the image is sigma-invariant
            assert _apply(fd.sigma, image) == image


def test_coinvariant_map_injective():
    # kernel representatives must already be trivial as coinvariants: every
    # small vector with a(v) = 0 is a difference sigma(b) - b
    for datum, sigma in ((A3, FLIP_A3), (D4, TRIALITY_D4)):
        fd = fold(datum, sigma)
        n = datum.rank
        diffs = set()
        span = [-2, -1, 0, 1, 2]
        stack = [()]
        for _ in range(n):
            stack = [v + (c,) for v in stack for c in span]
        for b in stack:
            diffs.add(tuple(s - x for s, x in zip(_apply(fd.sigma, b), b)))
        for v in stack:
            if coinvariant_map_a(fd, v) == (0,) * n:
                assert v in diffs


def test_untwist_classification():
    fd = fold(A3, FLIP_A3)
    assert untwist_classify(fd, Fraction(1, 2)) is UntwistClass.UNTWISTED
    assert untwist_classify(fd, Fraction(1, 3)) is UntwistClass.TWISTED
    assert untwist_classify(fd, Fraction(3, 4)) is UntwistClass.UNTWISTED
    assert untwist_classify(fd, 2) is UntwistClass.TWISTED
    fd3 = fold(D4, TRIALITY_D4)
    assert untwist_classify(fd3, Fraction(1, 3)) is UntwistClass.UNTWISTED
    assert untwist_classify(fd3, Fraction(1, 6)) is UntwistClass.UNTWISTED
    assert untwist_classify(fd3, Fraction(1, 2)) is UntwistClass.TWISTED
    # trivial automorphism: every nonzero level is untwisted-describable
    fd1 = fold(A2, (1, 2))
    assert untwist_classify(fd1, Fraction(5, 7)) is UntwistClass.UNTWISTED
    assert untwist_classify(fd1, -3) is UntwistClass.UNTWISTED
    with pytest.raises(ValueError):
        untwist_classify(fd, 0)
