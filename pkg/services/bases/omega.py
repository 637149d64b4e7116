"""The vectors omega_A, Omega_A and the gl(n) highest weight vectors Omega_lambda."""

import logging

from common.config import get_settings
from services.combinatorics.groups import young_subgroup
from services.combinatorics.matrices import ExponentMatrix, exponent_matrix, tableau_from_matrix
from services.combinatorics.partitions import CombinatoricsError, Partition
from services.combinatorics.tableaux import YoungTableau, row_orbit, row_permute
from services.fock.context import FockContext
from services.fock.operators import apply_multibrackets
from services.fock.vector import FockVector, linear_combination

logger = logging.getLogger(__name__)


def _check_fits(ctx: FockContext, tableau: YoungTableau) -> None:
    if tableau.shape.length > ctx.n:
        raise CombinatoricsError(f"Tableau with {tableau.shape.length} rows does not fit n={ctx.n}")
    for row in tableau.rows:
        for value in row:
            ctx.check_mode(value)


def omega_A(ctx: FockContext, tableau: YoungTableau) -> FockVector:
    """omega_A = sum over column permutations sgn(sigma) B_{A_sigma}^+ v_0.

    Computed as the product of column multibrackets [col_1][col_2]...[col_m] v_0.
    """
    _check_fits(ctx, tableau)
    return apply_multibrackets(ctx, tableau.columns(), FockVector.vacuum())


def Omega_A(ctx: FockContext, tableau: YoungTableau, full_group: bool = False) -> FockVector:
    """Omega_A = sum over tau in S_lambda of omega_{A^tau}.

    The default path sums distinct row rearrangements weighted by their stabilizer
    order; full_group=True enumerates S_lambda itself (bounded by young_subgroup_bound).
    """
    _check_fits(ctx, tableau)
    if full_group:
        bound = get_settings().young_subgroup_bound
        return linear_combination(
            (1, omega_A(ctx, row_permute(tableau, element.perms))) for element in young_subgroup(tableau.shape, bound)
        )
    return linear_combination((multiplicity, omega_A(ctx, member)) for member, multiplicity in row_orbit(tableau))


def Omega_gamma(ctx: FockContext, gamma: ExponentMatrix) -> FockVector:
    """Omega_{D(gamma)}."""
    return Omega_A(ctx, tableau_from_matrix(gamma))


def highest_weight_tableau(shape: Partition) -> YoungTableau:
    """D(gamma_lambda): row k filled with k."""
    return YoungTableau(tuple((k + 1,) * part for k, part in enumerate(shape.parts)))


def omega_lambda(ctx: FockContext, shape: Partition) -> FockVector:
    """omega_lambda = [B_1^+, ..., B_{l_1}^+] ... v_0 for the columns of lambda."""
    return omega_A(ctx, highest_weight_tableau(shape))


def raw_highest_weight_vector(ctx: FockContext, shape: Partition) -> FockVector:
    """lambda! omega_lambda as a word vector, without the vanishing rule."""
    if shape.length > ctx.n:
        raise CombinatoricsError(f"Partition {shape} has more than n={ctx.n} parts")
    return omega_lambda(ctx, shape) * shape.factorial()


def highest_weight_vector(ctx: FockContext, shape: Partition) -> FockVector:
    """Omega_lambda = lambda! omega_lambda, and zero when l(lambda) > p."""
    if shape.length > ctx.n:
        raise CombinatoricsError(f"Partition {shape} has more than n={ctx.n} parts")
    if shape.length > ctx.p:
        return FockVector.zero()
    return raw_highest_weight_vector(ctx, shape)


def omega_for_tableau_class(ctx: FockContext, tableau: YoungTableau) -> FockVector:
    """Omega_{D(gamma_A)}; equal to Omega_A since both only depend on gamma_A."""
    return Omega_gamma(ctx, exponent_matrix(tableau, ctx.n))
