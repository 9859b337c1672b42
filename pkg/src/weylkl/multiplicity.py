"""Verma-module composition multiplicities and graded character data.

For a stratification of a rational coweight ``lam`` with dominant
representative ``lam'``, the highest weights ``w(lam') - rho`` for ``w`` in
the index set label a block of Verma modules over the Langlands-dual Lie
algebra.  The multiplicity of the simple module with highest weight
``y(lam') - rho`` inside the Verma with highest weight ``w(lam') - rho``
equals the Kazhdan-Lusztig polynomial ``P_{w w0, y w0}`` of the subsystem's
Coxeter system evaluated at 1, where ``w0`` is the longest element of the
subgroup generated by the generators fixing ``lam'``.  The polynomial itself
is the graded (layer-by-layer) version of the multiplicity.

Graded partition counts for character manipulations live here as well: the
q-coefficient of a partition count records the number of parts, so that
summing ``K_alpha(q) e^alpha`` reproduces the product of geometric series
``1/(1 - q e^beta)`` over the relevant positive vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coxeter import CoxeterElement, bruhat_leq, longest_element, multiply
from .endoscopy import Stratification, coweight_orbit_action
from .kl import KLFileCache, kl_polynomial, _padd, _pshift
from .linalg import invert_unitriangular

__all__ = [
    "index_highest_weights",
    "multiplicity_polynomial",
    "multiplicity",
    "multiplicity_matrix",
    "inverse_multiplicity_matrix",
    "graded_partition_polynomial",
    "graded_partition_series",
    "simple_weight_multiplicity",
    "simple_module_dimension",
]


def _singular_longest(strat: Stratification) -> CoxeterElement:
    return longest_element(strat.system, strat.singular)


def index_highest_weights(strat: Stratification):
    """Highest weights w(lam') - rho, one per index-set element, in order."""
    rho = strat.datum.rho
    out = []
    for w in strat.index_set:
        moved = coweight_orbit_action(strat, w, strat.lambda_prime)
        out.append(tuple(m - r for m, r in zip(moved, rho)))
    return tuple(out)


def multiplicity_polynomial(strat: Stratification, w: CoxeterElement,
                            y: CoxeterElement,
                            file_cache: "KLFileCache|None" = None):
    """Graded multiplicity of the y-simple in the w-Verma (tuple of coeffs)."""
    if w not in strat.index_set or y not in strat.index_set:
        raise ValueError("multiplicities are indexed by the stratification's index set")
    w0 = _singular_longest(strat)
    return kl_polynomial(strat.system, multiply(w, w0), multiply(y, w0),
                         file_cache=file_cache)


def multiplicity(strat: Stratification, w: CoxeterElement, y: CoxeterElement,
                 file_cache: "KLFileCache|None" = None) -> int:
    """[Verma(w) : simple(y)]: the graded multiplicity evaluated at q = 1."""
    return sum(multiplicity_polynomial(strat, w, y, file_cache=file_cache))


def multiplicity_matrix(strat: Stratification,
                        file_cache: "KLFileCache|None" = None):
    """Rows w, columns y (index-set order): [Verma(w) : simple(y)].

    Upper unitriangular: the index set is sorted by length, and the entry
    vanishes unless w is below y in the Bruhat order.
    """
    w0 = _singular_longest(strat)
    shifted = [multiply(w, w0) for w in strat.index_set]
    size = len(shifted)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            poly = kl_polynomial(strat.system, shifted[i], shifted[j],
                                 file_cache=file_cache)
            row.append(sum(poly))
        rows.append(row)
    return rows


def inverse_multiplicity_matrix(strat: Stratification,
                                file_cache: "KLFileCache|None" = None):
    """Integer matrix A with simple(y) = sum_w A[y][w] * Verma(w) in characters."""
    return invert_unitriangular(multiplicity_matrix(strat, file_cache=file_cache))


# -- graded partition counts --------------------------------------------------


@lru_cache(maxsize=None)
def _partition_memo(vectors):
    return {}


def graded_partition_polynomial(vectors, target):
    """Ways of writing ``target`` as an N-combination of ``vectors``, graded
    by the number of parts: coefficient of q^k counts k-part partitions."""
    vectors = tuple(tuple(v) for v in vectors)
    target = tuple(target)
    if any(Fraction(t).denominator != 1 for t in target):
        return ()
    target = tuple(int(t) for t in target)
    memo = _partition_memo(vectors)

    def recurse(t, idx):
        if not any(t):
            return (1,)
        if idx == len(vectors):
            return ()
        key = (t, idx)
        got = memo.get(key)
        if got is not None:
            return got
        vec = vectors[idx]
        out = recurse(t, idx + 1)
        reduced = tuple(a - b for a, b in zip(t, vec))
        if all(c >= 0 for c in reduced):
            out = _padd(out, _pshift(recurse(reduced, idx), 1))
        memo[key] = out
        return out

    if any(t < 0 for t in target):
        return ()
    return recurse(target, 0)


def graded_partition_series(vectors, max_height):
    """Product of 1/(1 - q e^v) over ``vectors``, truncated by coordinate sum.

    Returns {exponent vector: coefficient polynomial in q} for all exponent
    vectors of coordinate sum at most ``max_height``.  Independent of
    :func:`graded_partition_polynomial` (product expansion vs recursion).
    """
    vectors = [tuple(v) for v in vectors]
    series = {tuple(0 for _ in range(len(vectors[0]) if vectors else 0)): (1,)}
    for vec in vectors:
        height = sum(vec)
        if height <= 0:
            raise ValueError("vectors must have positive coordinate sum")
        updated = dict(series)
        # multiply by sum_k q^k e^{k v}, truncating above max_height
        for expo, coeff in series.items():
            base = sum(expo)
            k = 1
            while base + k * height <= max_height:
                target = tuple(e + k * v for e, v in zip(expo, vec))
                term = _pshift(coeff, k)
                updated[target] = _padd(updated.get(target, ()), term)
                k += 1
        series = updated
    return {expo: coeff for expo, coeff in series.items()
            if sum(expo) <= max_height}


# -- weight multiplicities of the simple modules -------------------------------


def _require_full_integrality(strat: Stratification):
    if len(strat.integral_indices) != len(strat.datum.positive_roots):
        raise ValueError(
            "weight-multiplicity sums require a coweight pairing integrally "
            "with every positive root")


def _alternating_weight_dimension(coeffs, weights, coroots, nu):
    total = 0
    for coeff, hw in zip(coeffs, weights):
        if coeff == 0:
            continue
        gap = tuple(h - x for h, x in zip(hw, nu))
        total += coeff * sum(graded_partition_polynomial(coroots, gap))
    return total


def _inverse_row(strat, y, file_cache):
    try:
        row = strat.index_set.index(y)
    except ValueError:
        raise ValueError("y must be an index-set element") from None
    inverse = inverse_multiplicity_matrix(strat, file_cache=file_cache)
    return inverse[row]


def simple_weight_multiplicity(strat: Stratification, y: CoxeterElement, nu,
                               file_cache: "KLFileCache|None" = None) -> int:
    """dim of the nu-weight space of the simple module with h.w. y(lam') - rho.

    Evaluated through the inverse multiplicity matrix: an alternating sum of
    Verma weight-space dimensions, which are partition counts into the
    positive coroots.
    """
    _require_full_integrality(strat)
    coeffs = _inverse_row(strat, y, file_cache)
    weights = index_highest_weights(strat)
    coroots = strat.datum.positive_coroots
    nu = tuple(Fraction(x) for x in nu)
    return _alternating_weight_dimension(coeffs, weights, coroots, nu)


def simple_module_dimension(strat: Stratification, y: CoxeterElement = None,
                            file_cache: "KLFileCache|None" = None) -> int:
    """Total dimension of the simple module with highest weight y(lam') - rho.

    Finite for dominant data; computed weight space by weight space over the
    cone below the highest weight, bounded by the lowest weight in the
    subgroup orbit.
    """
    _require_full_integrality(strat)
    if y is None:
        y = strat.minimal_mover
    coeffs = _inverse_row(strat, y, file_cache)
    weights = index_highest_weights(strat)
    hw = weights[strat.index_set.index(y)]
    w0 = longest_element(strat.system)
    lowest = coweight_orbit_action(strat, w0, hw)
    depth = sum(h - l for h, l in zip(hw, lowest))
    if depth < 0 or Fraction(depth).denominator != 1:
        raise ValueError("the requested simple module is not finite dimensional")
    depth = int(depth)
    coroots = strat.datum.positive_coroots

    total = 0
    seen = set()
    stack = [tuple(hw)]
    while stack:
        nu = stack.pop()
        if nu in seen:
            continue
        seen.add(nu)
        gap = sum(h - x for h, x in zip(hw, nu))
        if gap > depth:
            continue
        total += _alternating_weight_dimension(coeffs, weights, coroots, nu)
        for vee in coroots:
            stack.append(tuple(x - v for x, v in zip(nu, vee)))
    return total
