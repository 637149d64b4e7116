"""The PBW-type basis E^{gamma_A} Omega_{lambda_A} of L(p) and the identities behind it."""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from common.results import CheckResult, check, skipped
from services.bases.gamma import apply_E_gamma
from services.bases.omega import Omega_gamma, highest_weight_vector, raw_highest_weight_vector
from services.combinatorics.matrices import ExponentMatrix, exponent_matrix
from services.combinatorics.partitions import Partition, hook_content_count, partitions_of
from services.combinatorics.tableaux import YoungTableau, enumerate_ssyt
from services.fock.context import FockContext
from services.fock.operators import apply_gl, apply_gl_power
from services.fock.vector import FockVector
from services.fock.weight_space import canonical_form, equals, get_cache
from services.linalg.matrix import RatMatrix, nullspace, rank

logger = logging.getLogger(__name__)

SCALAR_IDENTITY = "E^gamma Omega_lambda = (lambda!/diag(gamma)!) Omega_D(gamma)"
GL_ACTION = "E_ij Omega_D(gamma) = delta_ij p/2 Omega_D(gamma) + sum_k gamma_jk Omega_D(gamma+e_ik-e_jk)"
GL_POWER = "E_ij^m Omega_D(gamma) = gamma_jk!/(gamma_jk-m)! Omega_D(gamma+m(e_ik-e_jk))"
BASIS = "E^gamma_A Omega_lambda_A, A semistandard with l(lambda_A) <= p, is a basis"


class BasisIdentityError(Exception):
    """Raised when E^gamma_A Omega_lambda_A differs from its Omega_A expression."""

    pass


class PbwElement(NamedTuple):
    """One PBW-type basis vector with the tableau that labels it."""

    tableau: YoungTableau
    gamma: ExponentMatrix
    vector: FockVector  # E^{gamma_A} Omega_{lambda_A}


class NonBasisWitness(NamedTuple):
    """Linear dependency among the vectors B_A^+ v_0 of one weight."""

    counts: Tuple[int, ...]
    tableaux: List[YoungTableau]
    relation: Tuple[Fraction, ...]  # coefficients of a vanishing combination


def pbw_vector(ctx: FockContext, tableau: YoungTableau) -> FockVector:
    """E^{gamma_A} Omega_{lambda_A}."""
    return apply_E_gamma(ctx, exponent_matrix(tableau, ctx.n), highest_weight_vector(ctx, tableau.shape))


def scalar_identity_sides(ctx: FockContext, gamma: ExponentMatrix) -> Tuple[FockVector, FockVector]:
    """Both sides of E^gamma Omega_lambda = (lambda!/diag(gamma)!) Omega_D(gamma), lambda the column sums."""
    shape = Partition.of(gamma.column_sums())
    lhs = apply_E_gamma(ctx, gamma, raw_highest_weight_vector(ctx, shape))
    rhs = Omega_gamma(ctx, gamma) * Fraction(shape.factorial(), gamma.diag_factorial())
    return lhs, rhs


def verify_scalar_identity(ctx: FockContext, tableau: YoungTableau) -> CheckResult:
    gamma = exponent_matrix(tableau, ctx.n)
    lhs, rhs = scalar_identity_sides(ctx, gamma)
    return check(f"scalar identity for A={tableau.rows}", SCALAR_IDENTITY, equals(ctx, lhs, rhs), f"{ctx}")


def lower_triangular_gammas(shape: Partition, n: int) -> Iterator[ExponentMatrix]:
    """All lower triangular gamma with column sums lambda, i.e. fillings whose row j only holds entries >= j."""

    def distributions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in distributions(total - first, slots - 1):
                yield (first,) + rest

    parts = shape.padded(n)
    columns = [list(distributions(parts[j], n - j)) for j in range(n)]
    for choice in product(*columns):
        rows = [[0] * n for _ in range(n)]
        for j, column in enumerate(choice):
            for offset, value in enumerate(column):
                rows[j + offset][j] = value
        yield ExponentMatrix.from_rows(rows)


def verify_scalar_identity_all_fillings(ctx: FockContext, shape: Partition) -> List[CheckResult]:
    """The scalar identity for every filling of lambda with lower triangular gamma, semistandard or not."""
    results = []
    for gamma in lower_triangular_gammas(shape, ctx.n):
        lhs, rhs = scalar_identity_sides(ctx, gamma)
        results.append(
            check(f"scalar identity for gamma={gamma.to_list()}", SCALAR_IDENTITY, equals(ctx, lhs, rhs), f"{ctx}")
        )
    return results


def pbw_basis(ctx: FockContext, degree: int) -> List[PbwElement]:
    """Basis vectors of degree d, each checked against (lambda!/diag(gamma)!) Omega_A."""
    elements = []
    for shape in partitions_of(degree, min(ctx.n, ctx.p)):
        for tableau in enumerate_ssyt(shape, ctx.n):
            gamma = exponent_matrix(tableau, ctx.n)
            vector = pbw_vector(ctx, tableau)
            expected = Omega_gamma(ctx, gamma) * Fraction(shape.factorial(), gamma.diag_factorial())
            if not equals(ctx, vector, expected):
                raise BasisIdentityError(f"E^gamma Omega_lambda != (lambda!/diag(gamma)!) Omega_A for A={tableau.rows} in {ctx}")
            elements.append(PbwElement(tableau, gamma, vector))
    logger.info(f"Built {len(elements)} basis vectors of degree {degree} in {ctx}")
    return elements


def basis_rank_check(ctx: FockContext, degree: int) -> List[CheckResult]:
    """Independence per weight, and total count against the weight-space dimensions and the SSYT count."""
    elements = pbw_basis(ctx, degree)
    by_counts: Dict[Tuple[int, ...], List[PbwElement]] = defaultdict(list)
    for element in elements:
        by_counts[element.tableau.content(ctx.n)].append(element)

    results = []
    for counts, members in sorted(by_counts.items()):
        columns = [canonical_form(ctx, m.vector, counts) for m in members]
        matrix = RatMatrix.from_columns(columns, len(columns[0]))
        found = rank(matrix)
        results.append(check(f"independence at weight {counts}", BASIS, found == len(members), f"rank {found} of {len(members)}"))

    dimension = sum(space.dimension for space in get_cache(ctx).spaces_of_degree(degree))
    results.append(check(f"spanning in degree {degree}", BASIS, dimension == len(elements), f"dim {dimension}, basis {len(elements)}"))
    expected = sum(hook_content_count(shape, ctx.n) for shape in partitions_of(degree, min(ctx.n, ctx.p)))
    results.append(check(f"branching count in degree {degree}", BASIS, expected == len(elements), f"expected {expected}"))
    return results


def gl_action_rhs(ctx: FockContext, gamma: ExponentMatrix, i: int, j: int) -> FockVector:
    """delta_ij (p/2) Omega_D(gamma) + sum_k gamma_jk Omega_D(gamma + e_ik - e_jk)."""
    result = Omega_gamma(ctx, gamma) * ctx.half_p if i == j else FockVector.zero()
    for k in range(1, ctx.n + 1):
        multiplicity = gamma.at(j, k)
        if multiplicity:
            shifted = gamma.add(i, k, 1).add(j, k, -1)
            result = result + Omega_gamma(ctx, shifted) * multiplicity
    return result


def verify_gl_action(ctx: FockContext, gamma: ExponentMatrix, i: int, j: int) -> CheckResult:
    lhs = apply_gl(ctx, i, j, Omega_gamma(ctx, gamma))
    ok = equals(ctx, lhs, gl_action_rhs(ctx, gamma, i, j))
    return check(f"E_{i}{j} on Omega_D({gamma.to_list()})", GL_ACTION, ok)


def verify_gl_power(ctx: FockContext, gamma: ExponentMatrix, i: int, j: int) -> List[CheckResult]:
    """Powers of E_ij when every j of D(gamma) sits in a single row k, for m = 0 .. gamma_jk + 1."""
    name = f"E_{i}{j}^m on Omega_D({gamma.to_list()})"
    rows = [k for k in range(1, ctx.n + 1) if gamma.at(j, k)]
    if i == j or len(rows) != 1:
        return [skipped(name, GL_POWER, "needs i != j and all j's in one row")]
    k = rows[0]
    top = gamma.at(j, k)
    base = Omega_gamma(ctx, gamma)
    results = []
    for m in range(top + 2):
        lhs = apply_gl_power(ctx, i, j, m, base)
        if m > top:
            rhs = FockVector.zero()
        else:
            shifted = gamma.add(i, k, m).add(j, k, -m)
            rhs = Omega_gamma(ctx, shifted) * (factorial(top) // factorial(top - m))
        results.append(check(f"{name}, m={m}", GL_POWER, equals(ctx, lhs, rhs)))
    return results


def creation_monomial(tableau: YoungTableau) -> Tuple[int, ...]:
    """Word of B_A^+ v_0: entries of A read column by column, top to bottom."""
    return tuple(x for column in tableau.columns() for x in column)


def non_basis_witness(ctx: FockContext, degree: int) -> Optional[NonBasisWitness]:
    """Search the weights of one degree for a dependency among {B_A^+ v_0 : A semistandard, l(A) <= p}."""
    by_counts: Dict[Tuple[int, ...], List[YoungTableau]] = defaultdict(list)
    for shape in partitions_of(degree, min(ctx.n, ctx.p)):
        for tableau in enumerate_ssyt(shape, ctx.n):
            by_counts[tableau.content(ctx.n)].append(tableau)
    for counts, tableaux in sorted(by_counts.items()):
        columns = [canonical_form(ctx, FockVector.word(creation_monomial(t)), counts) for t in tableaux]
        kernel = nullspace(RatMatrix.from_columns(columns, len(columns[0])))
        if kernel:
            logger.info(f"Monomials B_A^+ v_0 are dependent at weight {counts} in {ctx}")
            return NonBasisWitness(counts, tableaux, kernel[0])
    return None
