"""Raising and lowering operators z_j^± of the Mickelsson-Zhelobenko algebra on highest weight vectors.

Coefficients in h written to the right of a monomial are evaluated on the weight of
the incoming vector, before the monomial acts.
"""

import logging
from fractions import Fraction
from math import prod
from typing import Callable

from common.enums import Sign
from services.bases.gamma import apply_E_gamma
from services.combinatorics.groups import complement, enumerate_index_tuples
from services.combinatorics.matrices import index_tuple_matrix
from services.fock.context import FockContext, h_difference
from services.fock.operators import apply_anticommutator, apply_annihilation, apply_creation
from services.fock.vector import FockVector
from services.mz.projector import SingularWeightError, extremal_project, extremal_project_oracle, require_highest_weight

logger = logging.getLogger(__name__)


def _per_component(ctx: FockContext, vector: FockVector, action: Callable[[tuple, FockVector], FockVector]) -> FockVector:
    result = FockVector.zero()
    for counts, part in vector.components(ctx.n).items():
        result = result + action(counts, part)
    return result


def _E_I(ctx: FockContext, indices, vector: FockVector) -> FockVector:
    """E^{e_I} v = E_{i2 i1} E_{i3 i2} ... E_{is,is-1} v."""
    return apply_E_gamma(ctx, index_tuple_matrix(indices, ctx.n), vector)


def _z_plus_component(ctx: FockContext, j: int, counts: tuple, part: FockVector) -> FockVector:
    # z_j^+ = sum_{i<=j} sum_{I in I_ij} (-1)^{s-1} E^{e_I} B_i^+ prod_{l in I^c}(h_l-h_j-1) prod_{l<i}(h_l-h_j)
    result = FockVector.zero()
    for i in range(1, j + 1):
        raised = apply_creation(ctx, i, part)
        lower = prod(h_difference(counts, l, j) for l in range(1, i))
        if lower == 0:
            continue
        for indices in enumerate_index_tuples(i, j):
            coefficient = (-1) ** (len(indices) - 1) * lower
            coefficient *= prod(h_difference(counts, l, j) - 1 for l in complement(indices))
            if coefficient:
                result = result + _E_I(ctx, indices, raised) * coefficient
    return result


def _z_minus_component(ctx: FockContext, j: int, counts: tuple, part: FockVector) -> FockVector:
    # z_j^- = sum_{i>=j} sum_{I in I_ji} E^{e_I} B_i^- prod_{l>j, l not in I}(h_j-h_l)
    result = FockVector.zero()
    for i in range(j, ctx.n + 1):
        lowered = apply_annihilation(ctx, i, part)
        if lowered.is_zero():
            continue
        for indices in enumerate_index_tuples(j, i):
            coefficient = prod(h_difference(counts, j, l) for l in range(j + 1, ctx.n + 1) if l not in indices)
            if coefficient:
                result = result + _E_I(ctx, indices, lowered) * coefficient
    return result


def z_plus(ctx: FockContext, j: int, vector: FockVector, check: bool = True) -> FockVector:
    """z_j^+ v for a highest weight vector v; the result is highest weight of weight mu + eps_j."""
    ctx.check_mode(j)
    if check:
        require_highest_weight(ctx, vector)
    return _per_component(ctx, vector, lambda counts, part: _z_plus_component(ctx, j, counts, part))


def z_minus(ctx: FockContext, j: int, vector: FockVector, check: bool = True) -> FockVector:
    """z_j^- v for a highest weight vector v; the result is highest weight of weight mu - eps_j."""
    ctx.check_mode(j)
    if check:
        require_highest_weight(ctx, vector)
    return _per_component(ctx, vector, lambda counts, part: _z_minus_component(ctx, j, counts, part))


def _plus_normalizer(counts: tuple, j: int) -> int:
    return prod(h_difference(counts, l, j) for l in range(1, j))


def _minus_normalizer(counts: tuple, j: int, n: int) -> int:
    return prod(h_difference(counts, j, l) for l in range(j + 1, n + 1))


def pB_plus(ctx: FockContext, j: int, vector: FockVector) -> FockVector:
    """p B_j^+ v = z_j^+ v / prod_{l<j}(h_l - h_j)."""
    require_highest_weight(ctx, vector)

    def action(counts: tuple, part: FockVector) -> FockVector:
        normalizer = _plus_normalizer(counts, j)
        if normalizer == 0:
            raise SingularWeightError(1, j, 0, counts)
        return _z_plus_component(ctx, j, counts, part) / normalizer

    return _per_component(ctx, vector, action)


def pB_minus(ctx: FockContext, j: int, vector: FockVector) -> FockVector:
    """p B_j^- v = z_j^- v / prod_{l>j}(h_j - h_l)."""
    require_highest_weight(ctx, vector)

    def action(counts: tuple, part: FockVector) -> FockVector:
        normalizer = _minus_normalizer(counts, j, ctx.n)
        if normalizer == 0:
            raise SingularWeightError(j, ctx.n, 0, counts)
        return _z_minus_component(ctx, j, counts, part) / normalizer

    return _per_component(ctx, vector, action)


def _project_pair(ctx: FockContext, vector: FockVector) -> FockVector:
    """p v, through the Gram-orthogonal projection where a projector denominator vanishes."""
    try:
        return extremal_project(ctx, vector)
    except SingularWeightError as e:
        logger.debug(f"Using the orthogonal projection: {e}")
        return extremal_project_oracle(ctx, vector)


def z_pair_plus(ctx: FockContext, i: int, j: int, vector: FockVector) -> FockVector:
    """p {B_i^+, B_j^+} v; singular weights fall back to the orthogonal projection."""
    require_highest_weight(ctx, vector)
    return _project_pair(ctx, apply_anticommutator(ctx, (Sign.PLUS, i), (Sign.PLUS, j), vector))


def z_pair_minus(ctx: FockContext, i: int, j: int, vector: FockVector) -> FockVector:
    """p {B_i^-, B_j^-} v; singular weights fall back to the orthogonal projection."""
    require_highest_weight(ctx, vector)
    return _project_pair(ctx, apply_anticommutator(ctx, (Sign.MINUS, i), (Sign.MINUS, j), vector))


def reconstruct_B(ctx: FockContext, sign: Sign, j: int, vector: FockVector) -> FockVector:
    """B_j^± v rebuilt from the projected generators p B_i^± on a highest weight vector.

    B_j^+ = p B_j^+ + sum_{i<j} sum_{I in I_ij, s>=2} E^{e_I} p B_i^+ prod_{I^c}(h_i-h_l+1) / prod_{l=i+1}^{j}(h_i-h_l)
    B_j^- = p B_j^- + sum_{i>j} sum_{I in I_ji, s>=2} E^{e_I} p B_i^- / prod_{l in I, l != i}(h_i-h_l)
    """
    require_highest_weight(ctx, vector)

    def plus(counts: tuple, part: FockVector) -> FockVector:
        result = _z_plus_component(ctx, j, counts, part) / _plus_normalizer(counts, j)
        for i in range(1, j):
            projected = _z_plus_component(ctx, i, counts, part) / _plus_normalizer(counts, i)
            if projected.is_zero():
                continue
            denominator = prod(h_difference(counts, i, l) for l in range(i + 1, j + 1))
            for indices in enumerate_index_tuples(i, j):
                numerator = prod(h_difference(counts, i, l) + 1 for l in complement(indices))
                if numerator:
                    result = result + _E_I(ctx, indices, projected) * Fraction(numerator, denominator)
        return result

    def minus(counts: tuple, part: FockVector) -> FockVector:
        result = _z_minus_component(ctx, j, counts, part) / _minus_normalizer(counts, j, ctx.n)
        for i in range(j + 1, ctx.n + 1):
            projected = _z_minus_component(ctx, i, counts, part) / _minus_normalizer(counts, i, ctx.n)
            if projected.is_zero():
                continue
            for indices in enumerate_index_tuples(j, i):
                denominator = prod(h_difference(counts, i, l) for l in indices if l != i)
                result = result + _E_I(ctx, indices, projected) / denominator
        return result

    return _per_component(ctx, vector, plus if sign is Sign.PLUS else minus)
