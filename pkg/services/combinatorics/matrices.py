"""Exponent matrices gamma_A, the tableaux D(gamma) and GZ patterns."""

from math import factorial, prod
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from services.combinatorics.partitions import CombinatoricsError, Partition
from services.combinatorics.tableaux import YoungTableau


class ExponentMatrix(NamedTuple):
    """n x n non-negative integer matrix; entry (i, j) counts the i's in row j of a tableau."""

    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExponentMatrix":
        values = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(values)
        if any(len(row) != n for row in values):
            raise CombinatoricsError(f"Exponent matrix must be square: {values}")
        if any(x < 0 for row in values for x in row):
            raise CombinatoricsError(f"Exponent matrix entries must be non-negative: {values}")
        return cls(values)

    @classmethod
    def zero(cls, n: int) -> "ExponentMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def unit(cls, i: int, j: int, n: int) -> "ExponentMatrix":
        """e_ij."""
        return cls.zero(n).add(i, j, 1)

    @classmethod
    def diagonal(cls, shape: Partition, n: int) -> "ExponentMatrix":
        """gamma_lambda = sum_i lambda_i e_ii."""
        parts = shape.padded(n)
        return cls(tuple(tuple(parts[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, i: int, j: int) -> int:
        """gamma_ij, 1-based."""
        return self.entries[i - 1][j - 1]

    def add(self, i: int, j: int, delta: int) -> "ExponentMatrix":
        """gamma + delta * e_ij (entries may become negative; callers check)."""
        rows = [list(row) for row in self.entries]
        rows[i - 1][j - 1] += delta
        return ExponentMatrix(tuple(tuple(row) for row in rows))

    def plus(self, other: "ExponentMatrix", scale: int = 1) -> "ExponentMatrix":
        return ExponentMatrix(
            tuple(tuple(a + scale * b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries))
        )

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def column_sums(self) -> Tuple[int, ...]:
        return tuple(sum(self.entries[i][j] for i in range(self.n)) for j in range(self.n))

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def strictly_lower(self) -> "ExponentMatrix":
        """Off-diagonal lower part; E^gamma only depends on these entries."""
        return ExponentMatrix(tuple(tuple(x if i > j else 0 for j, x in enumerate(row)) for i, row in enumerate(self.entries)))

    def diag_factorial(self) -> int:
        """diag(gamma)! = gamma_11! ... gamma_nn!"""
        return prod(factorial(self.entries[i][i]) for i in range(self.n))

    def reading_order(self) -> Tuple[int, ...]:
        """Strictly lower entries in the order gamma_21, gamma_31, gamma_32, gamma_41, ..."""
        return tuple(self.entries[k][j] for k in range(1, self.n) for j in range(k))

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def exponent_matrix(tableau: YoungTableau, n: int) -> ExponentMatrix:
    """gamma_A: entry (i, j) is the number of i's in row j of A."""
    rows = [[0] * n for _ in range(n)]
    if tableau.shape.length > n:
        raise CombinatoricsError(f"Tableau has more than {n} rows")
    for j, row in enumerate(tableau.rows):
        for value in row:
            if not 1 <= value <= n:
                raise CombinatoricsError(f"Entry {value} outside 1..{n}")
            rows[value - 1][j] += 1
    return ExponentMatrix(tuple(tuple(row) for row in rows))


def tableau_from_matrix(gamma: ExponentMatrix) -> YoungTableau:
    """D(gamma): gamma_ij i's in row j, each row sorted."""
    if not gamma.is_nonnegative():
        raise CombinatoricsError(f"Exponent matrix has negative entries: {gamma.entries}")
    shape = Partition.of(gamma.column_sums())
    rows = []
    for j in range(shape.length):
        rows.append(tuple(i + 1 for i in range(gamma.n) for _ in range(gamma.entries[i][j])))
    return YoungTableau(tuple(rows))


def is_ssyt_matrix(gamma: ExponentMatrix) -> bool:
    """True iff D(gamma) is semistandard, tested on gamma alone.

    gamma must be lower triangular with partition column sums and
    sum_{k=i}^{j} gamma_ki >= sum_{k=i+1}^{j+1} gamma_{k,i+1} for 1 <= i <= j <= n-1.
    """
    if not gamma.is_nonnegative() or not gamma.is_lower_triangular():
        return False
    sums = gamma.column_sums()
    if any(sums[i] < sums[i + 1] for i in range(gamma.n - 1)):
        return False
    for i in range(1, gamma.n):
        for j in range(i, gamma.n):
            upper = sum(gamma.at(k, i) for k in range(i, j + 1))
            lower = sum(gamma.at(k, i + 1) for k in range(i + 1, j + 2))
            if upper < lower:
                return False
    return True


def index_tuple_matrix(indices: Sequence[int], n: int) -> ExponentMatrix:
    """e_I = e_{i2 i1} + e_{i3 i2} + ... for I = (i1 < i2 < ... < is)."""
    gamma = ExponentMatrix.zero(n)
    for low, high in zip(indices, indices[1:]):
        gamma = gamma.add(high, low, 1)
    return gamma


def gz_pattern(tableau: YoungTableau, n: int) -> Tuple[Tuple[int, ...], ...]:
    """GZ pattern m_ij = sum_{k=i}^{j} gamma_ki for 1 <= i <= j <= n.

    Row j-1 of the result holds (m_1j, ..., m_jj).
    """
    if not tableau.semistandard:
        raise CombinatoricsError("GZ patterns are only defined for semistandard tableaux")
    gamma = exponent_matrix(tableau, n)
    return tuple(
        tuple(sum(gamma.at(k, i) for k in range(i, j + 1)) for i in range(1, j + 1)) for j in range(1, n + 1)
    )


def pattern_entry(pattern: Tuple[Tuple[int, ...], ...], i: int, j: int) -> int:
    """m_ij from a pattern produced by gz_pattern."""
    return pattern[j - 1][i - 1]


def satisfies_betweenness(pattern: Tuple[Tuple[int, ...], ...]) -> bool:
    """m_{i,j+1} >= m_ij >= m_{i+1,j+1} for every entry."""
    n = len(pattern)
    for j in range(1, n):
        for i in range(1, j + 1):
            m = pattern_entry(pattern, i, j)
            if not pattern_entry(pattern, i, j + 1) >= m >= pattern_entry(pattern, i + 1, j + 1):
                return False
    return all(x >= 0 for row in pattern for x in row)
