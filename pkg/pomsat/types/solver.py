from enum import Enum
from typing import Optional, Text, Tuple

from pydantic import BaseModel, ConfigDict, Field


class SatStatus(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


class SolverStats(BaseModel):
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    learned: int = 0
    time_ms: float = 0.0


class SatOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: SatStatus
    model: Optional[Tuple[bool, ...]] = Field(
        default=None, description="Truth value of variable i at position i - 1."
    )
    stats: SolverStats = Field(default_factory=SolverStats)
    backend: Text = "embedded"

    def value(self, var: int) -> bool:
        if self.model is None:
            raise ValueError(f"No model available, status is {self.status.value}")
        return self.model[var - 1]
