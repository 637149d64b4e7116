"""Expansions of B^± acting on E^gamma Omega_lambda into combinations of E^gamma' Omega_mu."""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import prod
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from common.enums import Sign
from services.bases.gamma import apply_E_gamma
from services.bases.omega import highest_weight_vector
from services.combinatorics.groups import complement, enumerate_index_tuples
from services.combinatorics.matrices import ExponentMatrix, index_tuple_matrix, tableau_from_matrix
from services.combinatorics.partitions import Partition
from services.combinatorics.tableaux import YoungTableau
from services.fock.context import FockContext
from services.fock.vector import FockVector, linear_combination
from services.linalg.rational import format_rational
from services.mz.coefficients import d_minus, d_plus

logger = logging.getLogger(__name__)


class HwTerm(NamedTuple):
    """coefficient * E^gamma Omega_shape; only the strictly lower part of gamma acts."""

    coefficient: Fraction
    gamma: ExponentMatrix
    shape: Partition


class HwExpansion(NamedTuple):
    """A linear combination of E^gamma Omega_lambda terms."""

    terms: Tuple[HwTerm, ...]

    @classmethod
    def of(cls, terms: Iterable[HwTerm]) -> "HwExpansion":
        """Merge equal (gamma, shape) pairs and drop zero coefficients."""
        merged: Dict[Tuple[ExponentMatrix, Partition], Fraction] = defaultdict(Fraction)
        for term in terms:
            merged[(term.gamma, term.shape)] += term.coefficient
        return cls(tuple(HwTerm(c, g, s) for (g, s), c in sorted(merged.items(), key=lambda kv: (kv[0][1], kv[0][0])) if c))

    def to_vector(self, ctx: FockContext) -> FockVector:
        return linear_combination(
            (term.coefficient, apply_E_gamma(ctx, term.gamma, highest_weight_vector(ctx, term.shape))) for term in self.terms
        )

    def completed(self) -> "HwExpansion":
        """Diagonally complete every gamma against its shape; terms that cannot be completed vanish."""
        terms = []
        for term in self.terms:
            gamma = complete_diagonal(term.gamma, term.shape)
            if gamma is not None:
                terms.append(HwTerm(term.coefficient, gamma, term.shape))
        return HwExpansion.of(terms)

    def omega_terms(self) -> List[Tuple[Fraction, YoungTableau]]:
        """Rewrite E^gamma Omega_mu = (mu!/diag(gamma)!) Omega_D(gamma); gamma must carry its diagonal completion."""
        return [
            (term.coefficient * Fraction(term.shape.factorial(), term.gamma.diag_factorial()), tableau_from_matrix(term.gamma))
            for term in self.terms
        ]

    def to_json(self) -> List[Dict[str, object]]:
        return [
            {"coeff": format_rational(t.coefficient), "gamma": t.gamma.to_list(), "lambda": list(t.shape.parts)}
            for t in self.terms
        ]


def _target(ctx: FockContext, shape: Partition, i: int, delta: int) -> Optional[Partition]:
    target = shape.shifted(i, delta)
    if target is None or target.length > min(ctx.n, ctx.p):
        return None
    return target


def _lam(ctx: FockContext, shape: Partition) -> Tuple[int, ...]:
    return (0,) + shape.padded(ctx.n)


def expand_B_on_hw(ctx: FockContext, sign: Sign, j: int, shape: Partition) -> HwExpansion:
    """B_j^± Omega_lambda as sum_i sum_I coefficient * E^{e_I} Omega_{lambda ± eps_i}.

    Terms whose target is not a partition with at most p parts are dropped.
    """
    lam = _lam(ctx, shape)
    terms = []
    if sign is Sign.PLUS:
        for i in range(1, j + 1):
            target = _target(ctx, shape, i, 1)
            if target is None:
                continue
            base = d_plus(ctx, shape, i)
            denominator = prod(lam[i] - lam[l] - i + l for l in range(i + 1, j + 1))
            for indices in enumerate_index_tuples(i, j):
                numerator = prod(lam[i] - lam[l] - i + l + 1 for l in complement(indices))
                terms.append(HwTerm(base * Fraction(numerator, denominator), index_tuple_matrix(indices, ctx.n), target))
    else:
        for i in range(j, ctx.n + 1):
            target = _target(ctx, shape, i, -1)
            if target is None:
                continue
            base = d_minus(ctx, shape, i)
            for indices in enumerate_index_tuples(j, i):
                denominator = prod(lam[i] - lam[l] - i + l for l in indices if l != i)
                terms.append(HwTerm(base / denominator, index_tuple_matrix(indices, ctx.n), target))
    return HwExpansion.of(terms)


class ReorderTerm(NamedTuple):
    """coefficient * E^gamma B_mode^± (the generator acts first)."""

    coefficient: int
    gamma: ExponentMatrix
    mode: int


def commute_B_plus_through(l: int, gamma: ExponentMatrix) -> List[ReorderTerm]:
    """B_l^+ E^gamma = sum_{j>=l} sum_{J in I_lj} (-1)^{t-1} prod_u gamma_{j_{u+1} j_u} E^{gamma - e_J} B_j^+."""
    terms = []
    for j in range(l, gamma.n + 1):
        for indices in enumerate_index_tuples(l, j):
            coefficient = (-1) ** (len(indices) - 1) * prod(gamma.at(b, a) for a, b in zip(indices, indices[1:]))
            if coefficient:
                terms.append(ReorderTerm(coefficient, gamma.plus(index_tuple_matrix(indices, gamma.n), -1), j))
    return terms


def commute_B_minus_through(l: int, gamma: ExponentMatrix) -> List[ReorderTerm]:
    """B_l^- E^gamma = E^gamma B_l^- + sum_{j<l} gamma_lj E^{gamma - e_lj} B_j^-."""
    terms = [ReorderTerm(1, gamma, l)]
    for j in range(1, l):
        if gamma.at(l, j):
            terms.append(ReorderTerm(gamma.at(l, j), gamma.add(l, j, -1), j))
    return terms


def commute_gamma_with_index_tuple(gamma: ExponentMatrix, indices: Tuple[int, ...]) -> List[Tuple[int, ExponentMatrix]]:
    """E^gamma E^{e_I} as a combination of ordered monomials E^gamma'.

    The sum runs over v_u >= i_u for u = 2..s with coefficient prod_u gamma_{v_u i_u}^{1 - delta}
    and gamma' = gamma + sum_u (e_{v_u i_{u-1}} - e_{v_u i_u}); the diagonal of gamma' is ignored.
    """
    n = gamma.n
    if len(indices) < 2:
        return [(1, gamma.strictly_lower())]
    choices = [range(i, n + 1) for i in indices[1:]]
    results: Dict[ExponentMatrix, int] = defaultdict(int)
    for targets in product(*choices):
        coefficient = 1
        shifted = gamma
        for u, v in enumerate(targets, start=1):
            low, high = indices[u - 1], indices[u]
            if v != high:
                coefficient *= gamma.at(v, high)
            shifted = shifted.add(v, low, 1).add(v, high, -1)
        if coefficient == 0:
            continue
        lower = shifted.strictly_lower()
        if not lower.is_nonnegative():
            continue
        results[lower] += coefficient
    return [(c, g) for g, c in sorted(results.items()) if c]


def complete_diagonal(gamma: ExponentMatrix, shape: Partition) -> Optional[ExponentMatrix]:
    """gamma with gamma_ll = mu_l - sum_{m>l} gamma_ml, or None when some diagonal entry is negative."""
    lower = gamma.strictly_lower()
    parts = shape.padded(gamma.n)
    completed = lower
    for l in range(1, gamma.n + 1):
        value = parts[l - 1] - sum(lower.at(m, l) for m in range(l + 1, gamma.n + 1))
        if value < 0:
            return None
        completed = completed.add(l, l, value)
    return completed


def expand_B_on_Egamma(ctx: FockContext, sign: Sign, l: int, gamma: ExponentMatrix, shape: Partition) -> HwExpansion:
    """B_l^± E^gamma Omega_lambda as sum c E^{gamma_bar} Omega_{lambda ± eps_i}, gamma_bar diagonally completed."""
    reorder = commute_B_plus_through if sign is Sign.PLUS else commute_B_minus_through
    terms = []
    for outer in reorder(l, gamma.strictly_lower()):
        if not outer.gamma.strictly_lower().is_nonnegative():
            continue
        for inner in expand_B_on_hw(ctx, sign, outer.mode, shape).terms:
            indices = _index_tuple_of(inner.gamma)
            for coefficient, merged in commute_gamma_with_index_tuple(outer.gamma.strictly_lower(), indices):
                completed = complete_diagonal(merged, inner.shape)
                if completed is None:
                    continue
                terms.append(HwTerm(outer.coefficient * inner.coefficient * coefficient, completed, inner.shape))
    return HwExpansion.of(terms)


def _index_tuple_of(gamma: ExponentMatrix) -> Tuple[int, ...]:
    """Recover I from e_I (a chain of unit entries below the diagonal)."""
    steps = sorted((j, i) for i in range(1, gamma.n + 1) for j in range(1, i) if gamma.at(i, j))
    if not steps:
        return ()
    chain = [steps[0][0]]
    for low, high in steps:
        chain.append(high)
    return tuple(chain)


def rank_three_expansion(ctx: FockContext, sign: Sign, j: int, shape: Partition) -> HwExpansion:
    """Explicit n = 3 expansions of B_j^± Omega_lambda into E-monomials on Omega_{lambda ± eps_i}."""
    if ctx.n != 3:
        raise ValueError("rank_three_expansion needs n = 3")
    lam = _lam(ctx, shape)
    l1, l2, l3 = lam[1], lam[2], lam[3]
    n = ctx.n
    e21 = index_tuple_matrix((1, 2), n)
    e32 = index_tuple_matrix((2, 3), n)
    e31 = index_tuple_matrix((1, 3), n)
    e21e32 = index_tuple_matrix((1, 2, 3), n)
    zero = ExponentMatrix.zero(n)
    raw: List[Tuple[Fraction, ExponentMatrix, int]] = []
    if sign is Sign.PLUS:
        d1, d2, d3 = (d_plus(ctx, shape, i) for i in (1, 2, 3))
        if j == 1:
            raw = [(d1, zero, 1)]
        elif j == 2:
            raw = [(d2, zero, 2), (d1 / (l1 - l2 + 1), e21, 1)]
        else:
            a = (l1 - l2 + 1) * (l1 - l3 + 2)
            raw = [
                (d3, zero, 3),
                (d2 / (l2 - l3 + 1), e32, 2),
                (d1 * (l1 - l2 + 2) / a, e31, 1),
                (d1 / a, e21e32, 1),
            ]
    else:
        d1, d2, d3 = (d_minus(ctx, shape, i) for i in (1, 2, 3))
        delta = int(l1 == l2)
        if j == 1:
            raw = [
                (d1, zero, 1),
                (-d2 / (l1 - l2 + 1), e21, 2),
                (-(1 - delta) * d3 / (l1 - l3 + 2), e31, 3),
                (d3 * (1 + delta * (l2 - l3 + 1)) / ((l2 - l3 + 1) * (l1 - l3 + 2)), e21e32, 3),
            ]
        elif j == 2:
            raw = [(d2, zero, 2), (-d3 / (l2 - l3 + 1), e32, 3)]
        else:
            raw = [(d3, zero, 3)]
    terms = []
    for coefficient, gamma, i in raw:
        target = _target(ctx, shape, i, sign.unit)
        if target is not None:
            terms.append(HwTerm(Fraction(coefficient), gamma, target))
    return HwExpansion.of(terms)
