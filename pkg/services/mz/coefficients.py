"""Closed-form coefficients d_j^±(lambda), c_j^±(lambda)^2 and the highest weight scalar d(lambda).

lambda is padded to n parts and lambda_{n+1} = 0. [x]_2 is the parity x mod 2.
"""

from fractions import Fraction
from math import factorial
from typing import Optional, Tuple

from services.combinatorics.partitions import Partition
from services.fock.context import FockContext


def parity(x: int) -> int:
    """[x]_2."""
    return x % 2


def _parts(ctx: FockContext, shape: Partition) -> Tuple[int, ...]:
    """lambda_1..lambda_n followed by lambda_{n+1} = 0, 1-based through index shift."""
    return (0,) + shape.padded(ctx.n) + (0,)


def _target(ctx: FockContext, shape: Partition, j: int, delta: int) -> Optional[Partition]:
    """lambda + delta eps_j when it is a partition with at most min(n, p) parts."""
    target = shape.shifted(j, delta)
    if target is None or target.length > min(ctx.n, ctx.p):
        return None
    return target


def d_plus(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """d_j^+(lambda), the coefficient of Omega_{lambda+eps_j} in B_j^+ Omega_lambda."""
    lam = _parts(ctx, shape)
    exponent = sum((a + 1) * (lam[a] - lam[a + 1] + (a == j)) for a in range(j, ctx.n + 1))
    value = Fraction((-1) ** exponent, (lam[j] + 1) * j)
    for l in range(1, j):
        x = lam[j] - lam[l] - j + l
        value *= Fraction(x + 1, x + parity(lam[j] - lam[l]))
    return value


def d_minus(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """d_j^-(lambda), the coefficient of Omega_{lambda-eps_j} in B_j^- Omega_lambda."""
    lam = _parts(ctx, shape)
    n, p = ctx.n, ctx.p
    exponent = sum((a + 1) * (lam[a] - lam[a + 1]) for a in range(j, n + 1))
    value = Fraction(lam[j] * j * (lam[j] + n - j + parity(lam[j]) * (p - n)) * (-1) ** exponent)
    for l in range(j + 1, n + 1):
        x = lam[j] - lam[l] - j + l
        value *= Fraction(x - 1, x - parity(lam[j] - lam[l]))
    return value


def c_plus_squared(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """c_j^+(lambda)^2, the squared GZ matrix element of B_j^+ between normalized highest weight vectors."""
    lam = _parts(ctx, shape)
    n, p = ctx.n, ctx.p
    value = Fraction(lam[j] + n + 1 - j + parity(lam[j] + 1) * (p - n))
    for l in range(1, n + 1):
        if l == j:
            continue
        x = lam[j] - lam[l] - j + l
        if l < j:
            value *= Fraction(x + 1, x)
        value *= Fraction(x, x + parity(lam[j] - lam[l]))
    return value


def c_minus_squared(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """c_j^-(lambda)^2 = c_j^+(lambda - eps_j)^2, zero when lambda - eps_j is not a partition."""
    lowered = shape.shifted(j, -1)
    if lowered is None:
        return Fraction(0)
    return c_plus_squared(ctx, lowered, j)


def z_scalar_plus(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """z_j^+ Omega_lambda = z_scalar_plus * Omega_{lambda+eps_j}."""
    if _target(ctx, shape, j, 1) is None:
        return Fraction(0)
    lam = _parts(ctx, shape)
    value = d_plus(ctx, shape, j)
    for l in range(1, j):
        value *= lam[l] - lam[j] - l + j
    return value


def z_scalar_minus(ctx: FockContext, shape: Partition, j: int) -> Fraction:
    """z_j^- Omega_lambda = z_scalar_minus * Omega_{lambda-eps_j}."""
    if _target(ctx, shape, j, -1) is None:
        return Fraction(0)
    lam = _parts(ctx, shape)
    value = d_minus(ctx, shape, j)
    for l in range(j + 1, ctx.n + 1):
        value *= lam[j] - lam[l] - j + l
    return value


def hw_scalar(shape: Partition) -> Fraction:
    """d(lambda) with (z_n^+)^{lambda_n} ... (z_1^+)^{lambda_1} v_0 = d(lambda) Omega_lambda."""
    lam = (0,) + shape.parts
    value = Fraction(1)
    for j in range(1, len(lam)):
        part = lam[j]
        exponent = (j + 1) * part * (part + 1) // 2 + (j - 1) * part
        value *= Fraction((-1) ** exponent, factorial(part) * j**part)
        for k in range(part):
            for l in range(1, j):
                value *= k - lam[l] - j + l + 1 - parity(k - lam[l])
    return value


def hw_scalar_iterated(ctx: FockContext, shape: Partition) -> Fraction:
    """d(lambda) as the product of z_j^+ scalars along 0 -> lambda_1 eps_1 -> ... -> lambda."""
    value = Fraction(1)
    current = Partition(())
    for j, part in enumerate(shape.parts, start=1):
        for _ in range(part):
            value *= z_scalar_plus(ctx, current, j)
            current = current.shifted(j, 1)
    return value
