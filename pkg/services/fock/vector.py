"""Vectors of L(p) as finite combinations of creation words over the vacuum."""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from services.fock.context import Word
from services.linalg.rational import Scalar, format_rational, parse_rational, to_fraction


class FockVector:
    """Immutable mapping word -> Fraction with no zero coefficients.

    The word (i_1, ..., i_k) stands for B_{i_1}^+ ... B_{i_k}^+ v_0, leftmost letter outermost.
    Equality is word-level; equality in L(p) goes through services.fock.weight_space.equals.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Word, Scalar], Iterable[Tuple[Word, Scalar]], None] = None):
        collected: Dict[Word, Fraction] = defaultdict(Fraction)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coefficient in items:
                collected[tuple(word)] += to_fraction(coefficient)
        self._terms = {word: c for word, c in sorted(collected.items()) if c != 0}

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({(): 1})

    @classmethod
    def word(cls, letters: Iterable[int], coefficient: Scalar = 1) -> "FockVector":
        return cls({tuple(letters): coefficient})

    def terms(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def words(self) -> List[Word]:
        return list(self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockVector) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(list(self.terms()) + list(other.terms()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __neg__(self) -> "FockVector":
        return FockVector({w: -c for w, c in self.terms()})

    def __mul__(self, scalar: Scalar) -> "FockVector":
        scalar = to_fraction(scalar)
        if scalar == 0:
            return FockVector()
        return FockVector({w: c * scalar for w, c in self.terms()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "FockVector":
        return self * (1 / to_fraction(scalar))

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self._terms})

    def components(self, n: int) -> Dict[Tuple[int, ...], "FockVector"]:
        """Split into weight components keyed by letter counts."""
        parts: Dict[Tuple[int, ...], Dict[Word, Fraction]] = defaultdict(dict)
        for word, coefficient in self.terms():
            counts = [0] * n
            for letter in word:
                counts[letter - 1] += 1
            parts[tuple(counts)][word] = coefficient
        return {key: FockVector(value) for key, value in sorted(parts.items())}

    def is_homogeneous(self, n: int) -> bool:
        return len(self.components(n)) <= 1

    def to_json(self) -> List[Dict[str, object]]:
        return [{"word": list(w), "coeff": format_rational(c)} for w, c in self.terms()]

    @classmethod
    def from_json(cls, records: Iterable[Mapping[str, object]]) -> "FockVector":
        return cls((tuple(int(x) for x in r["word"]), parse_rational(str(r["coeff"]))) for r in records)

    def pretty(self) -> str:
        """Human-readable form such as '2 B1+ B2+ |0⟩ - B2+ B1+ |0⟩'."""
        if not self._terms:
            return "0"
        pieces = []
        for index, (word, coefficient) in enumerate(self.terms()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            scalar = "" if magnitude == 1 else f"{magnitude} "
            ket = " ".join(f"B{i}+" for i in word)
            body = f"{scalar}{ket} |0⟩" if ket else f"{scalar}|0⟩"
            if index == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"FockVector({self.pretty()})"


def linear_combination(pairs: Iterable[Tuple[Scalar, FockVector]]) -> FockVector:
    """sum c * v over (c, v) pairs."""
    terms: List[Tuple[Word, Fraction]] = []
    for scalar, vector in pairs:
        scalar = to_fraction(scalar)
        if scalar:
            terms.extend((w, scalar * c) for w, c in vector.terms())
    return FockVector(terms)
