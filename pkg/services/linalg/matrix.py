"""Dense exact rational matrices: rank, span solving, kernels, inverses and PSD tests.

Rank and pivot detection scale each row to integers and run fraction-free
(Bareiss) elimination; solving uses Gauss-Jordan over Fractions.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from services.linalg.rational import Scalar, common_denominator, format_rational, parse_rational, to_fraction

logger = logging.getLogger(__name__)


class LinalgError(ValueError):
    """Raised on shape mismatches, singular inverses or non-symmetric PSD input."""

    pass


class RatMatrix:
    """Immutable rectangular matrix of Fractions."""

    __slots__ = ("_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], cols: Optional[int] = None):
        values = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if cols is None:
            cols = len(values[0]) if values else 0
        if any(len(row) != cols for row in values):
            raise LinalgError("Matrix rows must all have the same length")
        self._rows = values
        self._cols = cols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "RatMatrix":
        if any(len(c) != rows for c in columns):
            raise LinalgError("Columns must all have the requested length")
        return cls((tuple(c[i] for c in columns) for i in range(rows)), len(columns))

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self._rows), self._cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"RatMatrix({[[format_rational(x) for x in row] for row in self._rows]})"

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def transpose(self) -> "RatMatrix":
        return RatMatrix((self.column(j) for j in range(self._cols)), len(self._rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self._cols != other.shape[0]:
            raise LinalgError(f"Cannot multiply {self.shape} by {other.shape}")
        other_cols = [other.column(j) for j in range(other.shape[1])]
        return RatMatrix(
            (tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in other_cols) for row in self._rows),
            other.shape[1],
        )

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(vector) != self._cols:
            raise LinalgError(f"Vector of length {len(vector)} does not fit {self.shape}")
        vec = [to_fraction(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in self._rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix((tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i))

    def is_upper_triangular(self) -> bool:
        return all(self._rows[i][j] == 0 for i in range(len(self._rows)) for j in range(min(i, self._cols)))

    def to_json(self) -> List[List[str]]:
        return [[format_rational(x) for x in row] for row in self._rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "RatMatrix":
        return cls((parse_rational(x) for x in row) for row in data)


class SpanSolution(NamedTuple):
    """Outcome of solve_in_span: coefficients are None when the target is not in the span."""

    found: bool
    coefficients: Optional[Tuple[Fraction, ...]]


class PsdResult(NamedTuple):
    """Outcome of psd_check; witness is a vector of negative norm when not PSD."""

    is_psd: bool
    witness: Optional[Tuple[Fraction, ...]]


def _integer_rows(matrix: RatMatrix) -> List[List[int]]:
    rows = []
    for row in matrix.rows:
        scale = common_denominator(row)
        rows.append([int(x * scale) for x in row])
    return rows


def _bareiss_pivots(rows: List[List[int]], ncols: int) -> List[int]:
    """Fraction-free row echelon form in place; returns the pivot columns."""
    m = len(rows)
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, m):
            factor = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for k in range(c + 1, ncols):
                row_i[k] = (pivot * row_i[k] - factor * row_r[k]) // previous
            row_i[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return pivots


def pivot_columns(matrix: RatMatrix) -> Tuple[int, ...]:
    """Indices of the first linearly independent columns, scanning left to right."""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return ()
    return tuple(_bareiss_pivots(_integer_rows(matrix), cols))


def rank(matrix: RatMatrix) -> int:
    """Exact rank."""
    return len(pivot_columns(matrix))


def _rref(rows: List[List[Fraction]], ncols: int) -> List[int]:
    """Reduced row echelon form over Fractions, in place; returns pivot columns."""
    pivots: List[int] = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        if pivot != 1:
            rows[r] = [x / pivot for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def solve_in_span(basis: RatMatrix, target: Sequence[Scalar]) -> SpanSolution:
    """Find c with basis @ c = target; free variables are set to zero."""
    m, k = basis.shape
    if len(target) != m:
        raise LinalgError(f"Target of length {len(target)} does not match {m} rows")
    augmented = [list(row) + [to_fraction(t)] for row, t in zip(basis.rows, target)]
    pivots = _rref(augmented, k + 1)
    if k in pivots:
        return SpanSolution(False, None)
    coefficients = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        coefficients[c] = augmented[r][k]
    return SpanSolution(True, tuple(coefficients))


def nullspace(matrix: RatMatrix) -> List[Tuple[Fraction, ...]]:
    """Basis of the kernel, one vector per free column."""
    m, k = matrix.shape
    rows = [list(row) for row in matrix.rows]
    pivots = _rref(rows, k)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * k
        vector[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vector[c] = -rows[r][f]
        basis.append(tuple(vector))
    return basis


def inverse(matrix: RatMatrix) -> RatMatrix:
    """Inverse of a nonsingular square matrix."""
    n, m = matrix.shape
    if n != m:
        raise LinalgError(f"Cannot invert a {n}x{m} matrix")
    rows = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix.rows)]
    pivots = _rref(rows, n)
    if pivots != list(range(n)):
        raise LinalgError("Matrix is singular")
    return RatMatrix((row[n:] for row in rows), n)


def psd_check(gram: RatMatrix) -> PsdResult:
    """Decide positive semidefiniteness by symmetric elimination (LDL^T with pivoting).

    Each remaining index i carries a vector x_i with Schur entries S_ij = x_i^T G x_j,
    so a negative diagonal entry, or an off-diagonal entry between two zero diagonal
    entries, yields a witness of negative norm in the original coordinates.
    """
    if not gram.is_symmetric():
        raise LinalgError("psd_check requires a symmetric matrix")
    n = gram.shape[0]
    schur = {(i, j): gram[i, j] for i in range(n) for j in range(n)}
    vectors = {i: {i: Fraction(1)} for i in range(n)}
    remaining = list(range(n))

    def dense(vector: dict) -> Tuple[Fraction, ...]:
        return tuple(vector.get(i, Fraction(0)) for i in range(n))

    while remaining:
        negative = next((i for i in remaining if schur[i, i] < 0), None)
        if negative is not None:
            logger.debug(f"Negative diagonal at index {negative}")
            return PsdResult(False, dense(vectors[negative]))
        k = next((i for i in remaining if schur[i, i] > 0), None)
        if k is None:
            for a in remaining:
                for b in remaining:
                    if a < b and schur[a, b] != 0:
                        sign = 1 if schur[a, b] > 0 else -1
                        witness = dict(vectors[a])
                        for idx, value in vectors[b].items():
                            witness[idx] = witness.get(idx, Fraction(0)) - sign * value
                        return PsdResult(False, dense(witness))
            return PsdResult(True, None)
        d = schur[k, k]
        remaining.remove(k)
        for i in remaining:
            factor = schur[i, k] / d
            if factor:
                for idx, value in vectors[k].items():
                    vectors[i][idx] = vectors[i].get(idx, Fraction(0)) - factor * value
        for i in remaining:
            for j in remaining:
                schur[i, j] = schur[i, j] - schur[i, k] * schur[k, j] / d
    return PsdResult(True, None)


def quadratic_form(gram: RatMatrix, vector: Sequence[Scalar]) -> Fraction:
    """v^T G v."""
    image = gram.apply(vector)
    return sum((to_fraction(a) * b for a, b in zip(vector, image)), Fraction(0))
