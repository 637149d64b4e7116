"""The ordered monomials E^gamma in the lowering operators E_ij, i > j."""

from typing import List, Tuple

from services.combinatorics.matrices import ExponentMatrix
from services.combinatorics.partitions import CombinatoricsError
from services.fock.context import FockContext
from services.fock.operators import apply_gl_power
from services.fock.vector import FockVector


def gamma_factors(gamma: ExponentMatrix) -> List[Tuple[int, int, int]]:
    """(k, j, exponent) in product order: k = 2 leftmost to k = n rightmost, E_k1 ... E_{k,k-1} within k."""
    return [(k, j, gamma.at(k, j)) for k in range(2, gamma.n + 1) for j in range(1, k) if gamma.at(k, j)]


def apply_E_gamma(ctx: FockContext, gamma: ExponentMatrix, vector: FockVector) -> FockVector:
    """E^gamma v; diagonal and upper entries of gamma are ignored."""
    if gamma.n != ctx.n:
        raise CombinatoricsError(f"Exponent matrix of size {gamma.n} does not match n={ctx.n}")
    for k, j, power in reversed(gamma_factors(gamma)):
        vector = apply_gl_power(ctx, k, j, power, vector)
        if vector.is_zero():
            break
    return vector
