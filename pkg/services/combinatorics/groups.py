"""Young subgroups S_lambda and the index tuples I_ij(s)."""

from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from sympy.combinatorics import Permutation

from services.combinatorics.partitions import CombinatoricsError, Partition


class YoungSubgroupElement(NamedTuple):
    """One 0-based permutation per block (rows of lambda for S_lambda, columns for S_lambda')."""

    perms: Tuple[Tuple[int, ...], ...]

    @property
    def sign(self) -> int:
        """Product of the signs of the block permutations."""
        return prod(permutation_sign(p) for p in self.perms)


def permutation_sign(perm: Sequence[int]) -> int:
    if len(perm) < 2:
        return 1
    return Permutation(list(perm)).signature()


def young_subgroup_order(blocks: Sequence[int]) -> int:
    return prod(factorial(size) for size in blocks)


def young_subgroup(shape: Partition, bound: int) -> Iterator[YoungSubgroupElement]:
    """Enumerate S_lambda = S_lambda1 x S_lambda2 x ... when its order is at most bound.

    Pass conjugate(shape) to enumerate S_lambda'.
    """
    order = young_subgroup_order(shape.parts)
    if order > bound:
        raise CombinatoricsError(
            f"Young subgroup of {shape} has order {order}, above the enumeration bound {bound}"
        )
    blocks = [list(permutations(range(size))) for size in shape.parts]
    for perms in product(*blocks):
        yield YoungSubgroupElement(tuple(perms))


def enumerate_index_tuples(i: int, j: int) -> List[Tuple[int, ...]]:
    """All I = (i = i1 < i2 < ... < is = j), ordered by length s then lexicographically."""
    if i > j:
        return []
    if i == j:
        return [(i,)]
    inner = list(range(i + 1, j))
    result = []
    for size in range(len(inner) + 1):
        for middle in combinations(inner, size):
            result.append((i,) + middle + (j,))
    return result


def index_tuples_of_length(i: int, j: int, s: int) -> List[Tuple[int, ...]]:
    """I_ij(s)."""
    return [t for t in enumerate_index_tuples(i, j) if len(t) == s]


def complement(indices: Sequence[int]) -> Tuple[int, ...]:
    """Ordered complement of I inside {i1, ..., is}."""
    if not indices:
        return ()
    chosen = set(indices)
    return tuple(x for x in range(indices[0], indices[-1] + 1) if x not in chosen)
