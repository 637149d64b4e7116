"""Enumerations for CLI commands, output formats, verification suites and operator signs."""

from enum import Enum


# output formats for the CLI
class OutputFormat(str, Enum):
    """Supported output formats."""

    JSON = "json"
    CSV = "csv"  # One record per line, words flattened
    LATEX = "latex"  # tabular with bracket notation
    TEXT = "text"


class VerifySuite(str, Enum):
    """Named verification suites."""

    RELATIONS = "relations"  # Generator relations, gl(n) commutators, Gram checks
    BASES = "bases"  # Omega vectors and the PBW-type basis
    MZ = "mz"  # Projector, raising/lowering operators, d coefficients
    GZ = "gz"  # GZ vectors and transition matrices
    APPENDIX = "appendix"  # Multibracket identities and c/d coefficient identities
    ALL = "all"


class Sign(str, Enum):
    """Sign of a paraboson operator: creation (+) or annihilation (-)."""

    PLUS = "+"
    MINUS = "-"

    @property
    def unit(self) -> int:
        """+1 for creation, -1 for annihilation."""
        return 1 if self is Sign.PLUS else -1


class CheckStatus(str, Enum):
    """Outcome of a single identity check."""

    PASSED = "PASSED"
    FAILED = "FAILED"
    SKIPPED = "SKIPPED"  # Preconditions not met at this n, p


class Command(str, Enum):
    """CLI subcommands."""

    ENUMERATE = "enumerate"
    VERIFY = "verify"
    TRANSITION = "transition"
