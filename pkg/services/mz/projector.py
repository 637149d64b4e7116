"""The extremal projector of gl(n) acting on L(p), and its Gram-orthogonal oracle."""

import logging
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from services.fock.context import FockContext, h_difference
from services.fock.operators import apply_gl
from services.fock.vector import FockVector, linear_combination
from services.fock.weight_space import canonical_form, from_canonical, gram, is_null
from services.linalg.matrix import RatMatrix, inverse, nullspace
from services.linalg.rational import pochhammer

logger = logging.getLogger(__name__)


class SingularWeightError(ValueError):
    """Raised when a projector denominator (h_i - h_j + 1)_k vanishes on a non-null term."""

    def __init__(self, i: int, j: int, k: int, counts: Optional[Sequence[int]] = None):
        self.i, self.j, self.k = i, j, k
        where = f" at letter counts {tuple(counts)}" if counts is not None else ""
        super().__init__(f"Singular weight for p_{i}{j}: vanishing denominator at k={k}{where}")


class NotHighestWeightError(ValueError):
    """Raised when an operator that needs a highest weight vector receives something else."""

    pass


def root_order(n: int) -> List[Tuple[int, int]]:
    """Positive roots in the normal order (1,2) < (1,3) < (2,3) < (1,4) < ..."""
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def is_highest_weight(ctx: FockContext, vector: FockVector, upto: Optional[int] = None) -> bool:
    """True iff E_{i,i+1} v = 0 in L(p) for all i < upto (default n)."""
    limit = ctx.n if upto is None else upto
    return all(is_null(ctx, apply_gl(ctx, i, i + 1, vector)) for i in range(1, limit))


def require_highest_weight(ctx: FockContext, vector: FockVector, upto: Optional[int] = None) -> None:
    if not is_highest_weight(ctx, vector, upto):
        scope = f"gl({upto})" if upto is not None else f"gl({ctx.n})"
        raise NotHighestWeightError(f"Vector is not {scope}-highest: {vector.pretty()}")


def apply_p_ij(ctx: FockContext, i: int, j: int, vector: FockVector) -> FockVector:
    """p_ij v = sum_k (-1)^k / (k! (h_i - h_j + 1)_k) E_ji^k E_ij^k v, per weight component."""
    result = FockVector.zero()
    for counts, part in vector.components(ctx.n).items():
        x = h_difference(counts, i, j)
        terms: List[Tuple[Fraction, FockVector]] = [(Fraction(1), part)]
        raised = part
        k = 0
        while True:
            raised = apply_gl(ctx, i, j, raised)
            k += 1
            if raised.is_zero():
                break
            denominator = factorial(k) * pochhammer(x + 1, k)
            if denominator == 0:
                if is_null(ctx, raised):
                    break
                raise SingularWeightError(i, j, k, counts)
            lowered = raised
            for _ in range(k):
                lowered = apply_gl(ctx, j, i, lowered)
            terms.append((Fraction((-1) ** k) / denominator, lowered))
        result = result + linear_combination(terms)
    return result


def extremal_project(ctx: FockContext, vector: FockVector) -> FockVector:
    """p v with p = p_12 p_13 p_23 p_14 ... ; the rightmost factor acts first."""
    for i, j in reversed(root_order(ctx.n)):
        if vector.is_zero():
            break
        vector = apply_p_ij(ctx, i, j, vector)
    return vector


def singular_subspace(ctx: FockContext, counts: Sequence[int]) -> List[Tuple[Fraction, ...]]:
    """Pivot coordinates of a basis of the highest weight vectors of one weight."""
    counts = tuple(counts)
    space = gram(ctx, counts)
    if space.dimension == 0:
        return []
    rows: List[Tuple[Fraction, ...]] = []
    for i in range(1, ctx.n):
        if counts[i] == 0:
            continue
        target = counts[:i - 1] + (counts[i - 1] + 1, counts[i] - 1) + counts[i + 1:]
        images = [canonical_form(ctx, apply_gl(ctx, i, i + 1, FockVector.word(w)), target) for w in space.pivot_words]
        rows.extend(tuple(image[r] for image in images) for r in range(len(images[0])))
    if not rows:
        return [tuple(Fraction(int(a == b)) for b in range(space.dimension)) for a in range(space.dimension)]
    return nullspace(RatMatrix(rows, space.dimension))


def extremal_project_oracle(ctx: FockContext, vector: FockVector) -> FockVector:
    """Gram-orthogonal projection onto the highest weight vectors, computed per weight.

    With K a kernel basis and G the pivot Gram matrix: P = K (K^T G K)^{-1} K^T G.
    """
    result = FockVector.zero()
    for counts, part in vector.components(ctx.n).items():
        kernel = singular_subspace(ctx, counts)
        if not kernel:
            continue
        space = gram(ctx, counts)
        pivot_gram = space.gram.submatrix(space.pivots, space.pivots)
        k = RatMatrix.from_columns(kernel, space.dimension)
        kt_g = k.transpose() @ pivot_gram
        projector = k @ inverse(kt_g @ k) @ kt_g
        coordinates = projector.apply(canonical_form(ctx, part, counts))
        result = result + from_canonical(ctx, counts, coordinates)
    return result
