"""The Fock space L(p) of osp(1|2n): context and gl(n) weights."""

from fractions import Fraction
from typing import NamedTuple, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field


class FockError(ValueError):
    """Raised when a mode index lies outside 1..n or vectors of different contexts meet."""

    pass


Word = Tuple[int, ...]


class FockContext(BaseModel):
    """Rank n and order p of the paraboson Fock space."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    p: int = Field(..., ge=1)

    @property
    def half_p(self) -> Fraction:
        return Fraction(self.p, 2)

    def check_mode(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise FockError(f"Mode index {j} outside 1..{self.n}")

    def check_word(self, word: Word) -> None:
        for letter in word:
            self.check_mode(letter)

    def counts(self, word: Word) -> Tuple[int, ...]:
        """Letter counts (c_1, ..., c_n) of a creation word."""
        result = [0] * self.n
        for letter in word:
            self.check_mode(letter)
            result[letter - 1] += 1
        return tuple(result)

    def weight_of(self, word: Word) -> "GlWeight":
        return GlWeight.from_counts(self.counts(word), self.p)

    def __str__(self) -> str:
        return f"L(p={self.p}), n={self.n}"


class GlWeight(NamedTuple):
    """gl(n) weight stored doubled: doubled[i] = 2 mu_{i+1}, so p/2 offsets stay integral."""

    doubled: Tuple[int, ...]

    @classmethod
    def from_counts(cls, counts: Sequence[int], p: int) -> "GlWeight":
        """Weight of a word with the given letter counts: mu_i = p/2 + c_i."""
        return cls(tuple(p + 2 * c for c in counts))

    @classmethod
    def lowest(cls, n: int, p: int) -> "GlWeight":
        return cls((p,) * n)

    @property
    def n(self) -> int:
        return len(self.doubled)

    def mu(self, i: int) -> Fraction:
        """mu_i, 1-based."""
        return Fraction(self.doubled[i - 1], 2)

    def h(self, i: int) -> Fraction:
        """Value of h_i = E_ii - i + 1 on this weight."""
        return self.mu(i) - i + 1

    def h_diff(self, a: int, b: int) -> int:
        """h_a - h_b, always an integer."""
        return (self.doubled[a - 1] - self.doubled[b - 1]) // 2 - a + b

    def counts(self, p: int) -> Tuple[int, ...]:
        """Inverse of from_counts."""
        return tuple((x - p) // 2 for x in self.doubled)

    def degree(self, p: int) -> int:
        return sum(self.counts(p))

    def shift(self, i: int, delta: int) -> "GlWeight":
        """Weight shifted by delta * epsilon_i."""
        values = list(self.doubled)
        values[i - 1] += 2 * delta
        return GlWeight(tuple(values))

    def is_dominant_shift(self, p: int) -> bool:
        """True iff mu - p/2 is a partition."""
        counts = self.counts(p)
        return all(c >= 0 for c in counts) and all(counts[i] >= counts[i + 1] for i in range(len(counts) - 1))

    def __str__(self) -> str:
        return "(" + ", ".join(str(Fraction(x, 2)) for x in self.doubled) + ")"


def h_difference(counts: Sequence[int], a: int, b: int) -> int:
    """h_a - h_b on the weight of words with the given letter counts."""
    return counts[a - 1] - counts[b - 1] - a + b
