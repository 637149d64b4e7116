"""Pydantic schemas for CLI jobs and their output records."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from common.config import get_settings
from common.enums import CheckStatus, Command, OutputFormat, VerifySuite
from services.combinatorics.partitions import CombinatoricsError, Partition
from services.fock.context import FockContext


class JobConfig(BaseModel):
    """One CLI invocation. Identical configs (seed included) produce identical output."""

    command: Command
    n: int = Field(..., ge=1)
    p: int = Field(..., ge=1)
    degree: int = Field(2, ge=0)
    format: OutputFormat = OutputFormat.TEXT
    suite: VerifySuite = VerifySuite.ALL
    shape: Optional[str] = None  # "4,2,0"
    seed: int = Field(default_factory=lambda: get_settings().default_seed)
    out: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @field_validator("shape")
    @classmethod
    def shape_is_partition(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        try:
            Partition.parse(value)
        except CombinatoricsError as e:
            raise ValueError(str(e)) from e
        return value

    @model_validator(mode="after")
    def check_command_inputs(self) -> "JobConfig":
        if self.command is Command.TRANSITION:
            if self.shape is None:
                raise ValueError("transition needs --lambda")
            if self.partition.length > self.n:
                raise ValueError(f"lambda={self.shape} has more than n={self.n} parts")
        if self.degree > get_settings().degree_bound:
            raise ValueError(f"degree {self.degree} exceeds the configured bound {get_settings().degree_bound}")
        return self

    @property
    def context(self) -> FockContext:
        return FockContext(n=self.n, p=self.p)

    @property
    def partition(self) -> Partition:
        return Partition.parse(self.shape or "")


class WordTerm(BaseModel):
    """One creation word with its rational coefficient."""

    word: List[int]
    coeff: str


class BasisRecord(BaseModel):
    """A PBW-type basis vector E^{gamma_A} Omega_{lambda_A} = coeff * Omega_A."""

    degree: int
    shape: List[int]
    tableau: List[List[int]]
    gamma: List[List[int]]
    weight: List[int]  # letter counts
    coeff: str  # lambda!/diag(gamma)!
    norm2: str
    vector: List[WordTerm]


class CheckRecord(BaseModel):
    """Outcome of one identity check."""

    name: str
    anchor: str
    status: CheckStatus
    detail: str = ""


class SuiteReport(BaseModel):
    """All checks of one suite run."""

    suite: VerifySuite
    n: int
    p: int
    degree: int
    seed: int
    passed: bool
    checks: List[CheckRecord]


class BracketRecord(BaseModel):
    """v_A as a column-bracket polynomial on the vacuum."""

    tableau: List[List[int]]
    terms: List[str]
    latex: List[str]


class TransitionRecord(BaseModel):
    """One weight block of T and T^{-1}; rows follow tableaux."""

    shape: List[int]
    weight: List[int]
    tableaux: List[List[List[int]]]
    T: List[List[str]]
    T_inverse: List[List[str]]
    triangular: bool
    brackets: List[BracketRecord]
