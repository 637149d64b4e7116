"""Actions of B_j^+, B_j^-, E_ij = {B_i^+, B_j^-}/2 and multibrackets on FockVectors."""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Sequence, Tuple

from common.enums import Sign
from services.combinatorics.groups import permutation_sign
from services.fock.context import FockContext, Word
from services.fock.vector import FockVector

logger = logging.getLogger(__name__)

Operator = Tuple[Sign, int]


def apply_creation(ctx: FockContext, j: int, vector: FockVector) -> FockVector:
    """B_j^+ v: prepend letter j to every word."""
    ctx.check_mode(j)
    return FockVector({(j,) + w: c for w, c in vector.terms()})


def _gl_word(p: int, i: int, j: int, word: Word) -> Dict[Word, Fraction]:
    """E_ij on a single word: replace each j by i in turn, plus delta_ij p/2."""
    result: Dict[Word, Fraction] = defaultdict(Fraction)
    for t, letter in enumerate(word):
        if letter == j:
            result[word[:t] + (i,) + word[t + 1 :]] += 1
    if i == j:
        result[word] += Fraction(p, 2)
    return result


def apply_gl(ctx: FockContext, i: int, j: int, vector: FockVector) -> FockVector:
    """E_ij v, using [E_ij, B_k^+] = delta_jk B_i^+ and E_ij v_0 = delta_ij (p/2) v_0."""
    ctx.check_mode(i)
    ctx.check_mode(j)
    terms = []
    for word, coefficient in vector.terms():
        terms.extend((w, coefficient * c) for w, c in _gl_word(ctx.p, i, j, word).items())
    return FockVector(terms)


@lru_cache(maxsize=None)
def annihilate_word(p: int, j: int, word: Word) -> Tuple[Tuple[Word, int], ...]:
    """B_j^- on a word: B_j^-(B_i^+ u) = -B_i^+(B_j^- u) + 2 E_ij u, B_j^- v_0 = 0.

    Coefficients are integers since 2 E_ii contributes p.
    """
    if not word:
        return ()
    head, tail = word[0], word[1:]
    result: Dict[Word, int] = defaultdict(int)
    for w, c in annihilate_word(p, j, tail):
        result[(head,) + w] -= c
    for w, c in _gl_word(p, head, j, tail).items():
        result[w] += int(2 * c)
    return tuple((w, c) for w, c in result.items() if c)


def apply_annihilation(ctx: FockContext, j: int, vector: FockVector) -> FockVector:
    """B_j^- v."""
    ctx.check_mode(j)
    terms = []
    for word, coefficient in vector.terms():
        terms.extend((w, coefficient * c) for w, c in annihilate_word(ctx.p, j, word))
    return FockVector(terms)


def apply_operator(ctx: FockContext, sign: Sign, j: int, vector: FockVector) -> FockVector:
    if sign is Sign.PLUS:
        return apply_creation(ctx, j, vector)
    return apply_annihilation(ctx, j, vector)


def apply_operator_word(ctx: FockContext, ops: Sequence[Operator], vector: FockVector) -> FockVector:
    """Apply a product of B^± operators; the rightmost operator acts first."""
    for sign, j in reversed(ops):
        vector = apply_operator(ctx, sign, j, vector)
    return vector


def apply_anticommutator(ctx: FockContext, first: Operator, second: Operator, vector: FockVector) -> FockVector:
    """{B_i^xi, B_j^eta} v."""
    return apply_operator_word(ctx, (first, second), vector) + apply_operator_word(ctx, (second, first), vector)


def apply_commutator(ctx: FockContext, first: Operator, second: Operator, vector: FockVector) -> FockVector:
    """[B_i^xi, B_j^eta] v."""
    return apply_operator_word(ctx, (first, second), vector) - apply_operator_word(ctx, (second, first), vector)


@lru_cache(maxsize=4096)
def _bracket_prefixes(indices: Tuple[int, ...]) -> Tuple[Tuple[Word, int], ...]:
    """Signed words of [B_{i_1}^+, ..., B_{i_k}^+] = sum_sigma sgn(sigma) B_{i_sigma(1)}^+ ..."""
    result: Dict[Word, int] = defaultdict(int)
    for perm in permutations(range(len(indices))):
        result[tuple(indices[s] for s in perm)] += permutation_sign(perm)
    return tuple((w, c) for w, c in sorted(result.items()) if c)


def multibracket(ctx: FockContext, indices: Sequence[int], vector: FockVector) -> FockVector:
    """Apply the antisymmetrized product [B_{i_1}^+, ..., B_{i_k}^+] to a vector."""
    indices = tuple(indices)
    for i in indices:
        ctx.check_mode(i)
    prefixes = _bracket_prefixes(indices)
    return FockVector((prefix + w, s * c) for prefix, s in prefixes for w, c in vector.terms())


def apply_multibrackets(ctx: FockContext, columns: Iterable[Sequence[int]], vector: FockVector) -> FockVector:
    """[col_1][col_2]...[col_m] v: the last bracket acts first."""
    for column in reversed(list(columns)):
        vector = multibracket(ctx, column, vector)
    return vector


def apply_gl_power(ctx: FockContext, i: int, j: int, power: int, vector: FockVector) -> FockVector:
    """E_ij^power v."""
    for _ in range(power):
        if vector.is_zero():
            break
        vector = apply_gl(ctx, i, j, vector)
    return vector
