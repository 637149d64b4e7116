"""Lowering operators y_mj along the chain gl(m) > gl(m-1)."""

from math import prod

from services.combinatorics.groups import enumerate_index_tuples
from services.fock.context import FockContext, h_difference
from services.fock.operators import apply_gl
from services.fock.vector import FockVector
from services.mz.projector import require_highest_weight


def y_lower(ctx: FockContext, m: int, j: int, vector: FockVector, check: bool = True) -> FockVector:
    """y_mj v for v highest with respect to gl(m-1), 1 <= j < m <= n.

    y_mj = sum over I = (j = i1 < ... < is <= m-1) of E_{i2 i1} ... E_{is,is-1} E_{m,is}
    times prod_{l=j+1}^{m-1}, l not in I, of (h_j - h_l), evaluated on the weight of v.
    """
    ctx.check_mode(m)
    if not 1 <= j < m:
        raise ValueError(f"y_{m}{j} needs 1 <= j < m")
    if check:
        require_highest_weight(ctx, vector, upto=m - 1)
    result = FockVector.zero()
    for counts, part in vector.components(ctx.n).items():
        for top in range(j, m):
            for indices in enumerate_index_tuples(j, top):
                coefficient = prod(h_difference(counts, j, l) for l in range(j + 1, m) if l not in indices)
                if coefficient == 0:
                    continue
                term = apply_gl(ctx, m, indices[-1], part)
                for low, high in reversed(list(zip(indices, indices[1:]))):
                    term = apply_gl(ctx, high, low, term)
                result = result + term * coefficient
    return result
