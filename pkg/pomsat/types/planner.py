from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Text

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pomsat.cnf import CnfFormula
from pomsat.solver import check_backend
from pomsat.types.solver import SatStatus, SolverStats
from pomsat.types.strategy import FiniteMemoryStrategy
from pomsat.utils.common import is_strictly_increasing

Verdict = Literal["WINNING", "NO-STRATEGY", "UNKNOWN", "INCONCLUSIVE"]
Mu1Mode = Literal["observation", "memory"]


class SolveConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    pomdp_path: Optional[Path] = None
    mu: Optional[int] = Field(default=None, ge=1, description="Fixed memory size.")
    mu_max: Optional[int] = Field(
        default=None, ge=1, description="Search memory sizes 1..mu_max."
    )
    k: Optional[int] = Field(default=None, ge=1, description="Single horizon.")
    k_schedule: Optional[List[int]] = None
    deterministic: bool = False
    backend: Text = "embedded"
    seed: Optional[int] = None
    conflict_budget: Optional[int] = Field(default=None, ge=1)
    mu1_mode: Mu1Mode = "observation"
    workers: int = Field(default=1, ge=1)
    both_directions: bool = True

    out: Optional[Path] = None
    dimacs_out: Optional[Path] = None
    json_report: Optional[Path] = None

    @field_validator("k_schedule")
    @classmethod
    def _check_schedule(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is None:
            return value
        if not value:
            raise ValueError("k schedule is empty")
        if any(k < 1 for k in value):
            raise ValueError("k schedule values must be positive")
        if not is_strictly_increasing(value):
            raise ValueError("k schedule must be strictly increasing")
        return value

    @field_validator("backend")
    @classmethod
    def _check_backend(cls, value: Text) -> Text:
        return check_backend(value)

    @model_validator(mode="after")
    def _check_exclusive(self):
        if self.mu is not None and self.mu_max is not None:
            raise ValueError("Give either mu or mu_max, not both")
        if self.k is not None and self.k_schedule is not None:
            raise ValueError("Give either k or k_schedule, not both")
        return self

    def mu_values(self) -> List[int]:
        if self.mu is not None:
            return [self.mu]
        return list(range(1, (self.mu_max or 1) + 1))

    def explicit_schedule(self) -> Optional[List[int]]:
        if self.k is not None:
            return [self.k]
        return self.k_schedule


class Attempt(BaseModel):
    mu: int
    k: int
    encoding: Text
    status: SatStatus
    vars: int
    clauses: int
    encode_ms: float = 0.0
    solve_ms: float = 0.0
    solver_stats: SolverStats = Field(default_factory=SolverStats)


class SolveReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    verdict: Verdict
    mu: Optional[int] = None
    k: Optional[int] = None
    vars: int = 0
    clauses: int = 0
    solver_stats: SolverStats = Field(default_factory=SolverStats)
    time_ms: float = 0.0
    attempts: List[Attempt] = Field(default_factory=list)
    strategy: Optional[FiniteMemoryStrategy] = None
    formula: Optional[CnfFormula] = Field(default=None, exclude=True)

    @property
    def label(self) -> Text:
        if self.verdict == "WINNING":
            return f"WINNING({self.mu}, {self.k})"
        if self.verdict == "NO-STRATEGY":
            return f"NO-STRATEGY({self.mu})"
        return self.verdict

    def to_json_report(self) -> Dict[Text, Any]:
        return {
            "verdict": self.verdict,
            "mu": self.mu,
            "k": self.k,
            "vars": self.vars,
            "clauses": self.clauses,
            "solver_stats": self.solver_stats.model_dump(),
            "time_ms": self.time_ms,
        }
