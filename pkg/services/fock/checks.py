"""Operator identities of L(p): generator relations, gl(n) commutators, adjointness and multibracket rules."""

import logging
import random
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence

from common.enums import Sign
from common.results import CheckResult, check
from services.combinatorics.partitions import hook_content_count, partitions_of
from services.fock.context import FockContext
from services.fock.operators import (
    apply_annihilation,
    apply_anticommutator,
    apply_creation,
    apply_gl,
    apply_operator,
    multibracket,
)
from services.fock.vector import FockVector
from services.fock.weight_space import compositions, equals, gram, inner_product, words_of_weight
from services.linalg.matrix import psd_check

logger = logging.getLogger(__name__)

TRIPLE = "[{B_i^xi, B_j^eta}, B_l^eps] = (eps-eta) delta_jl B_i^xi + (eps-xi) delta_il B_j^eta"
GL_COMMUTATOR = "[E_ij, E_kl] = delta_jk E_il - delta_il E_kj"
ADJOINT = "<B_j^+ u, w> = <u, B_j^- w>"
PSD = "Gram matrix of each weight space is positive semidefinite"
BRANCHING = "sum over weights of Gram rank = sum_{lambda |- d, l(lambda) <= p} #SSYT(lambda, n)"
E_BRACKET = "E_ij [B_i1..B_ik] = [B_i1..B_ik] E_ij + sum_t delta_{j,i_t} [..B_i at t..]"
PLUS_BRACKET = "B_i^+ [B_i1..B_ik] = (-1)^{k+1} [..] B_i^+ + (-1)^k 2/(k+1) [.., B_i]"
MINUS_BRACKET = "B_i^- [..] = (-1)^k [..] B_i^- + sum_t (-1)^{t-1} 2k [..^t] E_{i_t i} + sum_t delta_{i,i_t} (-1)^t k(k-1) [..^t]"


def all_words(n: int, max_degree: int) -> List[tuple]:
    words = []
    for degree in range(max_degree + 1):
        for counts in compositions(degree, n):
            words.extend(words_of_weight(counts))
    return words


def sample_words(n: int, max_degree: int, limit: Optional[int], rng: Optional[random.Random]) -> List[tuple]:
    """All words up to max_degree, or a seeded sample of at most limit of them."""
    words = all_words(n, max_degree)
    if limit is not None and rng is not None and len(words) > limit:
        words = rng.sample(words, limit)
    return words


def triple_relation_residual(ctx: FockContext, xi: Sign, i: int, eta: Sign, j: int, eps: Sign, l: int, v: FockVector) -> FockVector:
    """[{B_i^xi, B_j^eta}, B_l^eps] v - (eps-eta) delta_jl B_i^xi v - (eps-xi) delta_il B_j^eta v."""
    def anti(w: FockVector) -> FockVector:
        return apply_anticommutator(ctx, (xi, i), (eta, j), w)

    result = anti(apply_operator(ctx, eps, l, v)) - apply_operator(ctx, eps, l, anti(v))
    if j == l and eps.unit != eta.unit:
        result = result - apply_operator(ctx, xi, i, v) * (eps.unit - eta.unit)
    if i == l and eps.unit != xi.unit:
        result = result - apply_operator(ctx, eta, j, v) * (eps.unit - xi.unit)
    return result


def check_triple_relations(ctx: FockContext, max_degree: int, limit: Optional[int] = None, rng: Optional[random.Random] = None) -> List[CheckResult]:
    failures = 0
    total = 0
    modes = range(1, ctx.n + 1)
    for word in sample_words(ctx.n, max_degree, limit, rng):
        v = FockVector.word(word)
        for xi, eta, eps in product(Sign, repeat=3):
            for i, j, l in product(modes, repeat=3):
                total += 1
                if not equals(ctx, triple_relation_residual(ctx, xi, i, eta, j, eps, l, v), FockVector.zero()):
                    failures += 1
                    logger.debug(f"Triple relation fails for {xi.value}{i} {eta.value}{j} {eps.value}{l} on {word}")
    return [check(f"triple relations up to degree {max_degree}", TRIPLE, failures == 0, f"{failures} of {total} failed, {ctx}")]


def check_gl_commutators(ctx: FockContext, max_degree: int, limit: Optional[int] = None, rng: Optional[random.Random] = None) -> List[CheckResult]:
    failures = 0
    modes = range(1, ctx.n + 1)
    for word in sample_words(ctx.n, max_degree, limit, rng):
        v = FockVector.word(word)
        for i, j, k, l in product(modes, repeat=4):
            lhs = apply_gl(ctx, i, j, apply_gl(ctx, k, l, v)) - apply_gl(ctx, k, l, apply_gl(ctx, i, j, v))
            rhs = FockVector.zero()
            if j == k:
                rhs = rhs + apply_gl(ctx, i, l, v)
            if i == l:
                rhs = rhs - apply_gl(ctx, k, j, v)
            if lhs != rhs:
                failures += 1
    return [check(f"gl(n) commutators up to degree {max_degree}", GL_COMMUTATOR, failures == 0, f"{failures} failures, {ctx}")]


def check_adjointness(ctx: FockContext, max_degree: int) -> List[CheckResult]:
    failures = 0
    for degree in range(max_degree):
        for counts in compositions(degree, ctx.n):
            for u in words_of_weight(counts):
                for j in range(1, ctx.n + 1):
                    raised_counts = counts[: j - 1] + (counts[j - 1] + 1,) + counts[j:]
                    for w in words_of_weight(raised_counts):
                        lhs = inner_product(ctx, apply_creation(ctx, j, FockVector.word(u)), FockVector.word(w))
                        rhs = inner_product(ctx, FockVector.word(u), apply_annihilation(ctx, j, FockVector.word(w)))
                        failures += lhs != rhs
    return [check(f"adjointness up to degree {max_degree}", ADJOINT, failures == 0, f"{failures} failures, {ctx}")]


def check_gram_spaces(ctx: FockContext, max_degree: int) -> List[CheckResult]:
    """PSD of every weight space and the dimension count per degree."""
    results = []
    not_psd = []
    for degree in range(max_degree + 1):
        rank_sum = 0
        for counts in compositions(degree, ctx.n):
            space = gram(ctx, counts)
            rank_sum += space.dimension
            if not psd_check(space.gram).is_psd:
                not_psd.append(counts)
        expected = sum(hook_content_count(shape, ctx.n) for shape in partitions_of(degree, min(ctx.n, ctx.p)))
        results.append(check(f"dimension count in degree {degree}", BRANCHING, rank_sum == expected, f"rank {rank_sum}, expected {expected}"))
    results.append(check(f"Gram PSD up to degree {max_degree}", PSD, not not_psd, f"not PSD at {not_psd}" if not_psd else ""))
    return results


def e_bracket_rhs(ctx: FockContext, i: int, j: int, indices: Sequence[int], v: FockVector) -> FockVector:
    result = multibracket(ctx, indices, apply_gl(ctx, i, j, v))
    for t, letter in enumerate(indices):
        if letter == j:
            replaced = tuple(indices[:t]) + (i,) + tuple(indices[t + 1 :])
            result = result + multibracket(ctx, replaced, v)
    return result


def plus_bracket_rhs(ctx: FockContext, i: int, indices: Sequence[int], v: FockVector) -> FockVector:
    k = len(indices)
    first = multibracket(ctx, indices, apply_creation(ctx, i, v)) * (-1) ** (k + 1)
    second = multibracket(ctx, tuple(indices) + (i,), v) * (Fraction((-1) ** k * 2, k + 1))
    return first + second


def minus_bracket_rhs(ctx: FockContext, i: int, indices: Sequence[int], v: FockVector) -> FockVector:
    k = len(indices)
    result = multibracket(ctx, indices, apply_annihilation(ctx, i, v)) * (-1) ** k
    for t in range(1, k + 1):
        rest = tuple(indices[: t - 1]) + tuple(indices[t:])
        result = result + multibracket(ctx, rest, apply_gl(ctx, indices[t - 1], i, v)) * ((-1) ** (t - 1) * 2 * k)
        if indices[t - 1] == i:
            result = result + multibracket(ctx, rest, v) * ((-1) ** t * k * (k - 1))
    return result


def check_bracket_identities(ctx: FockContext, max_degree: int, max_bracket: int, rng: random.Random, samples: int) -> List[CheckResult]:
    """The three multibracket commutation rules on seeded random words and brackets."""
    words = all_words(ctx.n, max_degree)
    e_fail = plus_fail = minus_fail = 0
    for _ in range(samples):
        word = rng.choice(words)
        k = rng.randint(1, max_bracket)
        indices = tuple(rng.randint(1, ctx.n) for _ in range(k))
        i = rng.randint(1, ctx.n)
        j = rng.randint(1, ctx.n)
        v = FockVector.word(word)
        bracketed = multibracket(ctx, indices, v)
        e_fail += apply_gl(ctx, i, j, bracketed) != e_bracket_rhs(ctx, i, j, indices, v)
        plus_fail += not equals(ctx, apply_creation(ctx, i, bracketed), plus_bracket_rhs(ctx, i, indices, v))
        minus_fail += not equals(ctx, apply_annihilation(ctx, i, bracketed), minus_bracket_rhs(ctx, i, indices, v))
    detail = f"{samples} samples, {ctx}"
    return [
        check("E_ij past a multibracket", E_BRACKET, e_fail == 0, f"{e_fail} failures of {detail}"),
        check("B_i^+ past a multibracket", PLUS_BRACKET, plus_fail == 0, f"{plus_fail} failures of {detail}"),
        check("B_i^- past a multibracket", MINUS_BRACKET, minus_fail == 0, f"{minus_fail} failures of {detail}"),
    ]
