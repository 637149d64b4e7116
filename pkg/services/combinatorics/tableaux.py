"""Young tableaux: semistandard enumeration, row/column permutations and serialization."""

from itertools import product
from math import factorial, prod
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from services.combinatorics.partitions import CombinatoricsError, Partition, conjugate


class YoungTableau(NamedTuple):
    """A filling of a Young diagram, stored as rows; cells (k, l) are 1-based."""

    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "YoungTableau":
        """Build a tableau from ragged rows, checking that the row lengths form a partition."""
        values = tuple(tuple(int(x) for x in row) for row in rows)
        values = tuple(row for row in values if row)
        Partition.of(len(row) for row in values)
        if any(x < 1 for row in values for x in row):
            raise CombinatoricsError(f"Tableau entries must be positive: {values}")
        return cls(values)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, k: int, l: int) -> int:
        """A(k, l)."""
        return self.rows[k - 1][l - 1]

    def columns(self) -> List[Tuple[int, ...]]:
        """Columns read top to bottom, left to right."""
        cols = conjugate(self.shape)
        return [tuple(self.rows[k][l] for k in range(cols.parts[l])) for l in range(cols.length)]

    def content(self, n: int) -> Tuple[int, ...]:
        """Number of entries equal to 1, ..., n."""
        counts = [0] * n
        for row in self.rows:
            for x in row:
                if x > n:
                    raise CombinatoricsError(f"Entry {x} exceeds n={n}")
                counts[x - 1] += 1
        return tuple(counts)

    @property
    def semistandard(self) -> bool:
        """Rows weakly increasing, columns strictly increasing."""
        for row in self.rows:
            if any(row[l] > row[l + 1] for l in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
                return False
        return True

    def reading_word(self) -> Tuple[int, ...]:
        """Row reading word, first row first."""
        return tuple(x for row in self.rows for x in row)

    def to_text(self) -> str:
        """Canonical text form: one row per line, entries separated by spaces."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_dict(self) -> Dict[str, List]:
        return {"shape": list(self.shape.parts), "rows": [list(row) for row in self.rows]}


def parse_tableau(text: str) -> YoungTableau:
    """Inverse of YoungTableau.to_text; rows may also be separated by '/'."""
    lines = [line for line in text.replace("/", "\n").splitlines() if line.strip()]
    try:
        return YoungTableau.from_rows([int(x) for x in line.split()] for line in lines)
    except ValueError as e:
        if isinstance(e, CombinatoricsError):
            raise
        raise CombinatoricsError(f"Cannot parse tableau from {text!r}") from e


def tableau_from_dict(data: Dict) -> YoungTableau:
    tableau = YoungTableau.from_rows(data["rows"])
    if list(tableau.shape.parts) != list(data.get("shape", tableau.shape.parts)):
        raise CombinatoricsError(f"Shape {data.get('shape')} does not match rows {data['rows']}")
    return tableau


def enumerate_ssyt(shape: Partition, n: int) -> List[YoungTableau]:
    """All semistandard tableaux of the shape with entries in 1..n, lex on reading words."""
    if shape.length > n:
        return []
    cells = [(k, l) for k, row_length in enumerate(shape.parts) for l in range(row_length)]
    filling = [[0] * row_length for row_length in shape.parts]
    results: List[YoungTableau] = []

    def backtrack(pos: int) -> None:
        if pos == len(cells):
            results.append(YoungTableau(tuple(tuple(row) for row in filling)))
            return
        k, l = cells[pos]
        low = 1
        if l > 0:
            low = max(low, filling[k][l - 1])  # row weakly increasing
        if k > 0:
            low = max(low, filling[k - 1][l] + 1)  # column strictly increasing
        for value in range(low, n + 1):
            filling[k][l] = value
            backtrack(pos + 1)
        filling[k][l] = 0

    backtrack(0)
    return results


def row_permute(tableau: YoungTableau, tau: Sequence[Sequence[int]]) -> YoungTableau:
    """A^tau(k, l) = A(k, tau_k(l)); tau holds one 0-based permutation per row."""
    _check_permutations(tau, tableau.shape.parts, "row")
    return YoungTableau(tuple(tuple(row[tau_k[l]] for l in range(len(row))) for row, tau_k in zip(tableau.rows, tau)))


def column_permute(tableau: YoungTableau, sigma: Sequence[Sequence[int]]) -> YoungTableau:
    """A_sigma(k, l) = A(sigma_l(k), l); sigma holds one 0-based permutation per column."""
    cols = tableau.columns()
    _check_permutations(sigma, tuple(len(c) for c in cols), "column")
    new_cols = [tuple(col[sigma_l[k]] for k in range(len(col))) for col, sigma_l in zip(cols, sigma)]
    return YoungTableau(
        tuple(tuple(new_cols[l][k] for l in range(len(row))) for k, row in enumerate(tableau.rows))
    )


def _check_permutations(perms: Sequence[Sequence[int]], lengths: Sequence[int], kind: str) -> None:
    if len(perms) != len(lengths):
        raise CombinatoricsError(f"Expected {len(lengths)} {kind} permutations, got {len(perms)}")
    for perm, length in zip(perms, lengths):
        if sorted(perm) != list(range(length)):
            raise CombinatoricsError(f"{tuple(perm)} is not a permutation of a {kind} of length {length}")


def row_stabilizer_order(tableau: YoungTableau) -> int:
    """Number of tau in S_lambda with A^tau = A."""
    total = 1
    for row in tableau.rows:
        for value in set(row):
            total *= factorial(row.count(value))
    return total


def row_orbit(tableau: YoungTableau) -> List[Tuple[YoungTableau, int]]:
    """Distinct row rearrangements of A with the size of each stabilizer.

    Summing f(A^tau) over S_lambda equals summing multiplicity * f(B) over this list.
    """
    multiplicity = row_stabilizer_order(tableau)
    row_choices = [[tuple(p) for p in multiset_permutations(sorted(row))] for row in tableau.rows]
    orbit = [YoungTableau(tuple(rows)) for rows in product(*row_choices)]
    orbit.sort()
    return [(member, multiplicity) for member in orbit]


def row_orbit_size(tableau: YoungTableau) -> int:
    """lambda! divided by the stabilizer order."""
    return prod(factorial(len(row)) for row in tableau.rows) // row_stabilizer_order(tableau)
