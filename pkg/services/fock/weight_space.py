"""Weight spaces of L(p): word bases, Gram matrices, pivot bases and equality modulo the radical."""

import logging
import threading
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from common.config import get_settings
from services.fock.context import FockContext, FockError, GlWeight, Word
from services.fock.operators import annihilate_word
from services.fock.vector import FockVector
from services.linalg.matrix import RatMatrix, inverse, pivot_columns

logger = logging.getLogger(__name__)

Counts = Tuple[int, ...]


class DegreeBoundError(ValueError):
    """Raised when a weight space beyond the configured degree bound is requested."""

    pass


def words_of_weight(counts: Sequence[int]) -> List[Word]:
    """All creation words with the given letter counts, in lexicographic order."""
    letters = [i + 1 for i, c in enumerate(counts) for _ in range(c)]
    if not letters:
        return [()]
    return [tuple(w) for w in multiset_permutations(letters)]


def compositions(total: int, parts: int) -> Iterator[Counts]:
    """Letter-count vectors of the given degree, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class WeightSpace(NamedTuple):
    """Word basis of one weight with its Gram matrix and canonical pivot words."""

    counts: Counts
    words: Tuple[Word, ...]
    index: Dict[Word, int]
    gram: RatMatrix
    pivots: Tuple[int, ...]
    pivot_gram_inverse: RatMatrix

    @property
    def dimension(self) -> int:
        """Dimension of the weight space in L(p)."""
        return len(self.pivots)

    @property
    def radical_dimension(self) -> int:
        return len(self.words) - len(self.pivots)

    @property
    def pivot_words(self) -> Tuple[Word, ...]:
        return tuple(self.words[i] for i in self.pivots)

    def coefficients(self, vector: FockVector) -> Tuple[Fraction, ...]:
        """Coefficient list of a vector in the word basis; the vector must live in this space."""
        values = [Fraction(0)] * len(self.words)
        for word, c in vector.terms():
            position = self.index.get(word)
            if position is None:
                raise FockError(f"Word {word} does not have letter counts {self.counts}")
            values[position] = c
        return tuple(values)

    def pivot_pairings(self, vector: FockVector) -> Tuple[Fraction, ...]:
        """G_{P,:} v: pairings of v with the pivot words."""
        coefficients = self.coefficients(vector)
        return tuple(
            sum((self.gram[i, k] * c for k, c in enumerate(coefficients) if c), Fraction(0)) for i in self.pivots
        )


class WeightSpaceCache:
    """Memo of WeightSpace objects for one (n, p). Fills are idempotent; the first stored wins."""

    def __init__(self, ctx: FockContext, degree_bound: Optional[int] = None):
        self.ctx = ctx
        self.degree_bound = get_settings().degree_bound if degree_bound is None else degree_bound
        self._spaces: Dict[Counts, WeightSpace] = {}
        self._lock = threading.Lock()

    def get(self, counts: Sequence[int]) -> WeightSpace:
        counts = tuple(counts)
        if len(counts) != self.ctx.n or any(c < 0 for c in counts):
            raise FockError(f"Invalid letter counts {counts} for n={self.ctx.n}")
        with self._lock:
            cached = self._spaces.get(counts)
        if cached is not None:
            return cached
        degree = sum(counts)
        if degree > self.degree_bound:
            raise DegreeBoundError(
                f"Weight space of degree {degree} exceeds the configured bound {self.degree_bound} "
                f"(raise PARABOSON_DEGREE_BOUND to allow it)"
            )
        space = self._build(counts)
        with self._lock:
            return self._spaces.setdefault(counts, space)

    def _build(self, counts: Counts) -> WeightSpace:
        words = tuple(words_of_weight(counts))
        index = {w: k for k, w in enumerate(words)}
        if sum(counts) == 0:
            gram = RatMatrix([[1]])
        else:
            gram = RatMatrix(self._gram_rows(counts, words))
        pivots = pivot_columns(gram)
        pivot_gram = gram.submatrix(pivots, pivots)
        space = WeightSpace(counts, words, index, gram, pivots, inverse(pivot_gram))
        logger.debug(
            f"Built weight space {counts} for {self.ctx}: {len(words)} words, "
            f"rank {len(pivots)}"
        )
        return space

    def _gram_rows(self, counts: Counts, words: Tuple[Word, ...]) -> List[List[int]]:
        # <a, b> = <a[1:], B_{a0}^- b>, peeled against the weight space of a[1:]
        p = self.ctx.p
        rows = []
        for a in words:
            head = a[0]
            lower = self.get(tuple(c - (k + 1 == head) for k, c in enumerate(counts)))
            row_index = lower.index[a[1:]]
            lower_row = lower.gram.rows[row_index]
            row = []
            for b in words:
                value = 0
                for word, c in annihilate_word(p, head, b):
                    value += c * lower_row[lower.index[word]]
                row.append(value)
            rows.append(row)
        return rows

    def spaces_of_degree(self, degree: int) -> Iterator[WeightSpace]:
        for counts in compositions(degree, self.ctx.n):
            yield self.get(counts)


_caches: Dict[Tuple[int, int], WeightSpaceCache] = {}
_caches_lock = threading.Lock()


def get_cache(ctx: FockContext) -> WeightSpaceCache:
    """Shared WeightSpaceCache for the context."""
    key = (ctx.n, ctx.p)
    with _caches_lock:
        cache = _caches.get(key)
        if cache is None:
            cache = _caches[key] = WeightSpaceCache(ctx)
        return cache


def clear_caches() -> None:
    with _caches_lock:
        _caches.clear()
    annihilate_word.cache_clear()


def gram(ctx: FockContext, counts: Sequence[int]) -> WeightSpace:
    """Weight space (Gram matrix and pivot basis) for the given letter counts."""
    return get_cache(ctx).get(counts)


def gram_for_weight(ctx: FockContext, weight: GlWeight) -> WeightSpace:
    counts = weight.counts(ctx.p)
    if any(c < 0 for c in counts):
        raise FockError(f"Weight {weight} is below the lowest weight of L(p)")
    return gram(ctx, counts)


def inner_product(ctx: FockContext, u: FockVector, w: FockVector) -> Fraction:
    """<u, w> with <v_0, v_0> = 1 and B_j^+ adjoint to B_j^-; weights are orthogonal."""
    total = Fraction(0)
    w_parts = w.components(ctx.n)
    for counts, u_part in u.components(ctx.n).items():
        w_part = w_parts.get(counts)
        if w_part is None:
            continue
        space = gram(ctx, counts)
        a = space.coefficients(u_part)
        b = space.gram.apply(space.coefficients(w_part))
        total += sum((x * y for x, y in zip(a, b) if x), Fraction(0))
    return total


def norm_squared(ctx: FockContext, vector: FockVector) -> Fraction:
    return inner_product(ctx, vector, vector)


def is_null(ctx: FockContext, vector: FockVector) -> bool:
    """True iff the vector vanishes in L(p), i.e. lies in the radical of the form."""
    for counts, part in vector.components(ctx.n).items():
        if any(gram(ctx, counts).pivot_pairings(part)):
            return False
    return True


def equals(ctx: FockContext, u: FockVector, w: FockVector) -> bool:
    """u = w in L(p)."""
    return is_null(ctx, u - w)


def canonical_form(ctx: FockContext, vector: FockVector, counts: Optional[Sequence[int]] = None) -> Tuple[Fraction, ...]:
    """Coordinates over the pivot words: c = G_PP^{-1} G_{P,:} v.

    The vector must be homogeneous; counts names the weight when the vector is zero.
    """
    parts = vector.components(ctx.n)
    if len(parts) > 1:
        raise FockError("canonical_form needs a homogeneous vector")
    if parts:
        (key, part), = parts.items()
        if counts is not None and tuple(counts) != key:
            raise FockError(f"Vector has letter counts {key}, expected {tuple(counts)}")
    elif counts is None:
        raise FockError("canonical_form of the zero vector needs explicit letter counts")
    else:
        key, part = tuple(counts), vector
    space = gram(ctx, key)
    return space.pivot_gram_inverse.apply(space.pivot_pairings(part))


def from_canonical(ctx: FockContext, counts: Sequence[int], coordinates: Sequence[Fraction]) -> FockVector:
    """Vector over the pivot words with the given coordinates."""
    space = gram(ctx, counts)
    return FockVector(zip(space.pivot_words, coordinates))


def radical_dimension(ctx: FockContext, counts: Sequence[int]) -> int:
    """Number of words minus the rank of the Gram matrix."""
    return gram(ctx, counts).radical_dimension
