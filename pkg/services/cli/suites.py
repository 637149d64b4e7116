"""Named verification suites assembled from the per-module checks."""

import logging
import random
from typing import Callable, Dict, List

from common.config import get_settings
from common.enums import CheckStatus, VerifySuite
from common.results import CheckResult, SuiteResult
from services.bases.checks import check_highest_weight_vectors, check_summation_paths
from services.bases.pbw import basis_rank_check, verify_gl_action, verify_gl_power, verify_scalar_identity
from services.cli.schemas import JobConfig
from services.combinatorics.matrices import exponent_matrix
from services.combinatorics.partitions import partitions_of
from services.combinatorics.tableaux import enumerate_ssyt
from services.fock.checks import (
    check_adjointness,
    check_bracket_identities,
    check_gl_commutators,
    check_gram_spaces,
    check_triple_relations,
)
from services.fock.context import FockContext
from services.mz.checks import (
    check_B_expansions,
    check_bracket_polynomials,
    check_c_identities,
    check_d_coefficients,
    check_Egamma_expansions,
    check_gz_basis,
    check_hw_scalars,
    check_projector,
    check_z_highest_weight,
    check_z_scalars,
    shapes_up_to,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_DEGREE = 3  # above this, word-level relation checks use a seeded sample
WORD_SAMPLE = 200
BRACKET_SAMPLES = 50
MAX_BRACKET = 3
RELATION_REACH = 3  # [{B, B}, B] on a word of degree d lands in degree d + 3


def _word_limit(degree: int):
    return None if degree <= EXHAUSTIVE_DEGREE else WORD_SAMPLE


def fit_word_degree(degree: int, reach: int) -> int:
    """Largest word degree <= degree whose images under reach operators stay within the degree bound."""
    bound = get_settings().degree_bound
    fitted = max(0, min(degree, bound - reach))
    if fitted < degree:
        logger.warning(f"Word degree lowered from {degree} to {fitted}: operators reach {reach} degrees past it and the bound is {bound}")
    return fitted


def relations_suite(ctx: FockContext, degree: int, rng: random.Random) -> List[CheckResult]:
    degree = fit_word_degree(degree, RELATION_REACH)
    limit = _word_limit(degree)
    results = check_triple_relations(ctx, degree, limit, rng)
    results += check_gl_commutators(ctx, degree, limit, rng)
    results += check_adjointness(ctx, degree)
    results += check_gram_spaces(ctx, degree)
    return results


def bases_suite(ctx: FockContext, degree: int, rng: random.Random) -> List[CheckResult]:
    results = check_highest_weight_vectors(ctx, degree)
    results += check_summation_paths(ctx, degree)
    for size in range(1, degree + 1):
        for shape in partitions_of(size, ctx.n):
            for tableau in enumerate_ssyt(shape, ctx.n):
                results.append(verify_scalar_identity(ctx, tableau))
                gamma = exponent_matrix(tableau, ctx.n)
                for i in range(1, ctx.n + 1):
                    for j in range(1, ctx.n + 1):
                        results.append(verify_gl_action(ctx, gamma, i, j))
                        if i != j:
                            results += [r for r in verify_gl_power(ctx, gamma, i, j) if r.status is not CheckStatus.SKIPPED]
    for size in range(degree + 1):
        results += basis_rank_check(ctx, size)
    return results


def mz_suite(ctx: FockContext, degree: int, rng: random.Random) -> List[CheckResult]:
    shapes = shapes_up_to(ctx, degree)
    below = [s for s in shapes if s.size < degree]
    results = check_d_coefficients(ctx, below)
    results += check_hw_scalars(ctx, shapes)
    results += check_z_scalars(ctx, below)
    results += check_z_highest_weight(ctx, below)
    results += check_B_expansions(ctx, below)
    results += check_Egamma_expansions(ctx, below)
    results += check_projector(ctx, degree)
    return results


def gz_suite(ctx: FockContext, degree: int, rng: random.Random) -> List[CheckResult]:
    shapes = shapes_up_to(ctx, degree)
    return check_gz_basis(ctx, shapes) + check_bracket_polynomials(ctx, shapes)


def appendix_suite(ctx: FockContext, degree: int, rng: random.Random) -> List[CheckResult]:
    results = check_bracket_identities(ctx, fit_word_degree(degree, MAX_BRACKET + 1), MAX_BRACKET, rng, BRACKET_SAMPLES)
    results += check_c_identities(ctx, shapes_up_to(ctx, degree))
    return results


SUITES: Dict[VerifySuite, Callable[[FockContext, int, random.Random], List[CheckResult]]] = {
    VerifySuite.RELATIONS: relations_suite,
    VerifySuite.BASES: bases_suite,
    VerifySuite.MZ: mz_suite,
    VerifySuite.GZ: gz_suite,
    VerifySuite.APPENDIX: appendix_suite,
}


def run_suite(config: JobConfig) -> SuiteResult:
    """Run the configured suite (every suite for ALL) with a generator seeded from config.seed."""
    ctx = config.context
    rng = random.Random(config.seed)
    names = list(SUITES) if config.suite is VerifySuite.ALL else [config.suite]
    checks: List[CheckResult] = []
    for name in names:
        logger.info(f"Running suite {name.value} for {ctx}, degree {config.degree}, seed {config.seed}")
        found = SUITES[name](ctx, config.degree, rng)
        failed = sum(1 for c in found if not c.passed)
        logger.info(f"Suite {name.value}: {len(found)} checks, {failed} failed")
        checks.extend(found)
    return SuiteResult(config.suite.value, checks)
