"""GZ basis vectors, their transition matrices to the PBW-type basis, and bracket-polynomial forms."""

import logging
from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Dict, List, NamedTuple, Tuple

from services.bases.pbw import pbw_vector
from services.combinatorics.groups import permutation_sign
from services.combinatorics.matrices import ExponentMatrix, exponent_matrix, tableau_from_matrix
from services.combinatorics.partitions import Partition
from services.combinatorics.tableaux import YoungTableau, enumerate_ssyt, row_orbit
from services.fock.context import FockContext
from services.fock.operators import apply_multibrackets
from services.fock.vector import FockVector, linear_combination
from services.fock.weight_space import canonical_form, norm_squared
from services.linalg.matrix import LinalgError, RatMatrix, inverse, solve_in_span
from services.linalg.rational import format_rational, pochhammer
from services.mz.coefficients import hw_scalar
from services.mz.lowering import y_lower
from services.mz.raising import z_plus

logger = logging.getLogger(__name__)


class TransitionError(Exception):
    """Raised when a GZ vector is not in the span of the PBW-type vectors of its shape."""

    pass


class GzVector(NamedTuple):
    """Unnormalized GZ vector v_A with <v_A, v_A>; the orthonormal vector is v_A / sqrt(norm_squared)."""

    tableau: YoungTableau
    vector: FockVector
    norm_squared: Fraction


def gz_vector(ctx: FockContext, tableau: YoungTableau) -> GzVector:
    """v_A = prod_k (y_k1^{gamma_k1} ... y_{k,k-1}^{gamma_k,k-1}) (z_n^+)^{lambda_n} ... (z_1^+)^{lambda_1} v_0."""
    shape = tableau.shape
    if not tableau.semistandard:
        raise ValueError(f"GZ vectors are labelled by semistandard tableaux, got {tableau.rows}")
    if shape.length > ctx.p:
        return GzVector(tableau, FockVector.zero(), Fraction(0))
    vector = FockVector.vacuum()
    for j, part in enumerate(shape.padded(ctx.n), start=1):
        for _ in range(part):
            vector = z_plus(ctx, j, vector, check=False)
    gamma = exponent_matrix(tableau, ctx.n)
    for k in range(ctx.n, 1, -1):
        for j in range(k - 1, 0, -1):
            for _ in range(gamma.at(k, j)):
                vector = y_lower(ctx, k, j, vector, check=False)
    return GzVector(tableau, vector, norm_squared(ctx, vector))


def gz_order_key(tableau: YoungTableau, n: int) -> Tuple:
    """Total order for triangularity: size, then the padded shape, then gamma_21, gamma_31, gamma_32, gamma_41, ...

    Padded shapes compare as tuples, which refines dominance: a shape that
    dominates another of the same size never sorts before it.
    """
    shape = tableau.shape
    return (shape.size, shape.padded(n), exponent_matrix(tableau, n).reading_order())


class TransitionBlock(NamedTuple):
    """Rows: v_A = sum_B T_AB E^{gamma_B} Omega_lambda for the tableaux of one weight, in gz_order_key order."""

    shape: Partition
    counts: Tuple[int, ...]
    tableaux: List[YoungTableau]
    matrix: RatMatrix
    inverse: RatMatrix

    @property
    def is_triangular(self) -> bool:
        size = len(self.tableaux)
        return self.matrix.is_upper_triangular() and all(self.matrix[k, k] != 0 for k in range(size))

    def row(self, tableau: YoungTableau) -> Dict[YoungTableau, Fraction]:
        index = self.tableaux.index(tableau)
        return {b: c for b, c in zip(self.tableaux, self.matrix.rows[index]) if c}

    def to_json(self) -> Dict[str, object]:
        return {
            "lambda": list(self.shape.parts),
            "weight": list(self.counts),
            "tableaux": [t.to_dict() for t in self.tableaux],
            "T": self.matrix.to_json(),
            "T_inverse": self.inverse.to_json(),
            "triangular": self.is_triangular,
        }


def transition_matrix(ctx: FockContext, shape: Partition) -> List[TransitionBlock]:
    """Transition blocks per weight; empty when l(lambda) > p.

    Each block carries is_triangular; a block that is not triangular in gz_order_key order is
    returned as computed and logged as a warning.
    """
    if shape.length > min(ctx.n, ctx.p):
        logger.info(f"Omega_{shape} vanishes in {ctx}; no transition matrix")
        return []
    by_counts: Dict[Tuple[int, ...], List[YoungTableau]] = defaultdict(list)
    for tableau in enumerate_ssyt(shape, ctx.n):
        by_counts[tableau.content(ctx.n)].append(tableau)

    blocks = []
    for counts, tableaux in sorted(by_counts.items(), reverse=True):
        tableaux.sort(key=lambda t: gz_order_key(t, ctx.n))
        columns = [canonical_form(ctx, pbw_vector(ctx, b), counts) for b in tableaux]
        basis = RatMatrix.from_columns(columns, len(columns[0]))
        rows = []
        for tableau in tableaux:
            target = canonical_form(ctx, gz_vector(ctx, tableau).vector, counts)
            solution = solve_in_span(basis, target)
            if not solution.found:
                raise TransitionError(f"v_A for A={tableau.rows} is not in the span of E^gamma Omega_{shape} in {ctx}")
            rows.append(solution.coefficients)
        matrix = RatMatrix(rows, len(tableaux))
        try:
            inv = inverse(matrix)
        except LinalgError as e:
            raise TransitionError(f"Transition block {counts} of {shape} is singular") from e
        block = TransitionBlock(shape, counts, tableaux, matrix, inv)
        if not block.is_triangular:
            logger.warning(f"Transition block {counts} of {shape} is not triangular in the chosen order")
        blocks.append(block)
    logger.info(f"Computed {len(blocks)} transition blocks for {shape} in {ctx}")
    return blocks


def rank_three_transition_coefficient(shape: Partition, gamma: ExponentMatrix, l: int) -> Fraction:
    """n = 3 closed form: T_{A,B(l)} = d(lambda) C(gamma_31, l) (lambda_1-lambda_2+2-gamma_31+gamma_32+l)_{gamma_31-l}.

    B(l) has gamma(l) = gamma + l(e_21 - e_31 + e_32 - e_22); zero when l > lambda_2 - lambda_3 - gamma_32.
    """
    l1, l2, l3 = shape.padded(3)
    g31, g32 = gamma.at(3, 1), gamma.at(3, 2)
    if l < 0 or l > g31 or l > l2 - l3 - g32:
        return Fraction(0)
    return hw_scalar(shape) * comb(g31, l) * pochhammer(l1 - l2 + 2 - g31 + g32 + l, g31 - l)


def shifted_gamma(gamma: ExponentMatrix, l: int) -> ExponentMatrix:
    """gamma(l) = gamma + l(e_21 - e_31 + e_32 - e_22)."""
    return gamma.add(2, 1, l).add(3, 1, -l).add(3, 2, l).add(2, 2, -l)


def rank_three_transition_row(ctx: FockContext, tableau: YoungTableau) -> Dict[YoungTableau, Fraction]:
    """Row of T for A from the n = 3 closed form."""
    if ctx.n != 3:
        raise ValueError("rank_three_transition_row needs n = 3")
    gamma = exponent_matrix(tableau, 3)
    row: Dict[YoungTableau, Fraction] = {}
    for l in range(gamma.at(3, 1) + 1):
        value = rank_three_transition_coefficient(tableau.shape, gamma, l)
        if value:
            row[tableau_from_matrix(shifted_gamma(gamma, l))] = value
    return row


def omega_expansion(shape: Partition, row: Dict[YoungTableau, Fraction], n: int) -> List[Tuple[Fraction, YoungTableau]]:
    """sum_B T_AB E^{gamma_B} Omega_lambda rewritten as sum_B T_AB (lambda!/diag(gamma_B)!) Omega_B."""
    terms = []
    for tableau, value in sorted(row.items()):
        gamma = exponent_matrix(tableau, n)
        terms.append((value * Fraction(shape.factorial(), gamma.diag_factorial()), tableau))
    return terms


class BracketTerm(NamedTuple):
    """coefficient * [col_1][col_2] ... v_0 with each column bracket in increasing order."""

    coefficient: Fraction
    columns: Tuple[Tuple[int, ...], ...]

    def _grouped(self) -> List[Tuple[Tuple[int, ...], int]]:
        groups: List[Tuple[Tuple[int, ...], int]] = []
        for column in self.columns:
            if groups and groups[-1][0] == column:
                groups[-1] = (column, groups[-1][1] + 1)
            else:
                groups.append((column, 1))
        return groups

    def to_text(self) -> str:
        factors = []
        for column, power in self._grouped():
            body = f"[{','.join(f'B{i}+' for i in column)}]" if len(column) > 1 else f"B{column[0]}+"
            factors.append(body if power == 1 else f"{body}^{power}")
        return f"{format_rational(self.coefficient)} " + " ".join(factors) + " |0⟩"

    def to_latex(self) -> str:
        factors = []
        for column, power in self._grouped():
            if len(column) > 1:
                body = "[" + ",".join(f"B_{{{i}}}^+" for i in column) + "]"
            else:
                body = f"B_{{{column[0]}}}^+" if power == 1 else f"(B_{{{column[0]}}}^+)"
            factors.append(body if power == 1 else f"{body}^{{{power}}}")
        coefficient = self.coefficient
        scalar = str(coefficient.numerator) if coefficient.denominator == 1 else f"\\frac{{{coefficient.numerator}}}{{{coefficient.denominator}}}"
        return f"{scalar}\\,{''.join(factors)}|0\\rangle"

    def to_vector(self, ctx: FockContext) -> FockVector:
        return apply_multibrackets(ctx, self.columns, FockVector.vacuum()) * self.coefficient


def bracket_expansion(omega_terms: List[Tuple[Fraction, YoungTableau]]) -> List[BracketTerm]:
    """Expand sum c Omega_B over row orbits into column-bracket monomials, merging equal monomials.

    A column with a repeated entry contributes zero; otherwise it is sorted, picking up the sorting sign.
    """
    merged: Dict[Tuple[Tuple[int, ...], ...], Fraction] = defaultdict(Fraction)
    for coefficient, tableau in omega_terms:
        for member, multiplicity in row_orbit(tableau):
            sign = 1
            key = []
            for column in member.columns():
                if len(set(column)) < len(column):
                    sign = 0
                    break
                order = sorted(range(len(column)), key=column.__getitem__)
                sign *= permutation_sign(order)
                key.append(tuple(sorted(column)))
            if sign:
                merged[tuple(key)] += coefficient * multiplicity * sign
    return [BracketTerm(c, key) for key, c in sorted(merged.items()) if c]


def brackets_to_vector(ctx: FockContext, terms: List[BracketTerm]) -> FockVector:
    return linear_combination((1, term.to_vector(ctx)) for term in terms)


def gz_from_creation_polynomials(ctx: FockContext, tableau: YoungTableau) -> List[BracketTerm]:
    """v_A as a polynomial in creation operators on the vacuum, in column-bracket form."""
    shape = tableau.shape
    if shape.length > min(ctx.n, ctx.p):
        return []
    if ctx.n == 3:
        row = rank_three_transition_row(ctx, tableau)
    else:
        blocks = [b for b in transition_matrix(ctx, shape) if tableau in b.tableaux]
        row = blocks[0].row(tableau)
    return bracket_expansion(omega_expansion(shape, row, ctx.n))
