"""Checks on the Omega vectors: highest weight property, vanishing rule and the two summation paths."""

from typing import List

from common.results import CheckResult, check, skipped
from services.bases.omega import Omega_A, highest_weight_vector, omega_for_tableau_class, raw_highest_weight_vector
from services.combinatorics.partitions import partitions_of
from services.combinatorics.tableaux import enumerate_ssyt, row_orbit
from services.fock.context import FockContext
from services.fock.operators import apply_gl
from services.fock.weight_space import equals, is_null

HW = "Omega_lambda is gl(n)-highest of weight lambda + p/2, nonzero iff l(lambda) <= p"
ORBIT = "Omega_A = sum over S_lambda of omega_{A^tau}"
ROW_INVARIANCE = "Omega_A depends only on gamma_A"


def check_highest_weight_vectors(ctx: FockContext, max_size: int) -> List[CheckResult]:
    results = []
    for size in range(max_size + 1):
        for shape in partitions_of(size, ctx.n):
            raw = raw_highest_weight_vector(ctx, shape)
            annihilated = all(is_null(ctx, apply_gl(ctx, i, j, raw)) for i in range(1, ctx.n + 1) for j in range(i + 1, ctx.n + 1))
            eigen = all(
                equals(ctx, apply_gl(ctx, i, i, raw), raw * (shape.part(i) + ctx.half_p)) for i in range(1, ctx.n + 1)
            )
            vanishes = is_null(ctx, raw)
            ok = annihilated and eigen and vanishes == (shape.length > ctx.p)
            ok = ok and (highest_weight_vector(ctx, shape).is_zero() == (shape.length > ctx.p))
            results.append(check(f"Omega_{shape}", HW, ok, f"{ctx}"))
    return results


def check_summation_paths(ctx: FockContext, max_size: int, group_bound: int = 720) -> List[CheckResult]:
    """The orbit-stabilizer sum against the full Young subgroup sum, and row-permutation invariance."""
    results = []
    for size in range(1, max_size + 1):
        for shape in partitions_of(size, ctx.n):
            if shape.factorial() > group_bound:
                results.append(skipped(f"full S_{shape} sum", ORBIT, f"|S_lambda| = {shape.factorial()} above {group_bound}"))
                continue
            for tableau in enumerate_ssyt(shape, ctx.n):
                reference = Omega_A(ctx, tableau, full_group=True)
                results.append(check(f"Omega_A for A={tableau.rows}", ORBIT, Omega_A(ctx, tableau) == reference))
                member, _ = row_orbit(tableau)[-1]
                same = Omega_A(ctx, member) == reference and omega_for_tableau_class(ctx, member) == reference
                results.append(check(f"Omega_A invariance for A={member.rows}", ROW_INVARIANCE, same))
    return results
