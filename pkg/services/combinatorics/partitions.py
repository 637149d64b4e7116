"""Integer partitions: conjugates, dominance and the hook-content count."""

from math import factorial, prod
from typing import Iterable, List, NamedTuple, Optional, Tuple


class CombinatoricsError(ValueError):
    """Raised when a combinatorial object is malformed."""

    pass


class Partition(NamedTuple):
    """A partition stored without trailing zeros; parts are 1-indexed via part()."""

    parts: Tuple[int, ...]

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition, dropping trailing zeros and validating the order."""
        values = tuple(int(x) for x in parts)
        if any(x < 0 for x in values):
            raise CombinatoricsError(f"Partition parts must be non-negative: {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise CombinatoricsError(f"Partition parts must be non-increasing: {values}")
        while values and values[-1] == 0:
            values = values[:-1]
        return cls(values)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma separated partition such as "4,2,0"."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls.of(int(x) for x in text.split(","))
        except ValueError as e:
            if isinstance(e, CombinatoricsError):
                raise
            raise CombinatoricsError(f"Cannot parse partition from {text!r}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """lambda_i for 1-based i, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> Tuple[int, ...]:
        """The parts as an n-tuple."""
        if self.length > n:
            raise CombinatoricsError(f"Partition {self.parts} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def factorial(self) -> int:
        """lambda! = lambda_1! lambda_2! ..."""
        return prod(factorial(x) for x in self.parts)

    def shifted(self, i: int, delta: int) -> Optional["Partition"]:
        """lambda + delta*eps_i, or None when the result is not a partition."""
        values = list(self.parts) + [0] * max(0, i - self.length)
        values[i - 1] += delta
        if values[i - 1] < 0:
            return None
        if any(values[k] < values[k + 1] for k in range(len(values) - 1)):
            return None
        return Partition.of(values)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


def conjugate(shape: Partition) -> Partition:
    """The conjugate partition: (lambda')_j = #{i : lambda_i >= j}."""
    if not shape.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in shape.parts if x >= j) for j in range(1, shape.parts[0] + 1)))


def dominates(shape: Partition, other: Partition) -> bool:
    """True when shape dominates other (partial sums never smaller)."""
    if shape.size != other.size:
        return False
    total_a = total_b = 0
    for i in range(1, max(shape.length, other.length) + 1):
        total_a += shape.part(i)
        total_b += other.part(i)
        if total_a < total_b:
            return False
    return True


def partitions_of(d: int, max_length: int) -> List[Partition]:
    """All partitions of d with at most max_length parts, largest first in lex order."""
    result: List[Partition] = []

    def build(remaining: int, largest: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            result.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for part in range(min(remaining, largest), 0, -1):
            build(remaining - part, part, prefix + (part,))

    if d < 0 or max_length < 0:
        return []
    build(d, d, ())
    return result


def hook_content_count(shape: Partition, n: int) -> int:
    """Number of SSYT of the shape with entries <= n, by the hook-content formula."""
    cols = conjugate(shape)
    numerator = 1
    denominator = 1
    for k, row_length in enumerate(shape.parts, start=1):
        for l in range(1, row_length + 1):
            numerator *= n + l - k
            denominator *= (row_length - l) + (cols.part(l) - k) + 1
    if numerator <= 0:
        return 0
    return numerator // denominator
