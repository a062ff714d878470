from pomsat.types.encoder import EncodeParams
from pomsat.types.planner import SolveConfig, SolveReport
from pomsat.types.pomdp import Pomdp, TargetedPomdp
from pomsat.types.solver import SatOutcome, SatStatus
from pomsat.types.strategy import FiniteMemoryStrategy, VerificationResult

__all__ = [
    "EncodeParams",
    "FiniteMemoryStrategy",
    "Pomdp",
    "SatOutcome",
    "SatStatus",
    "SolveConfig",
    "SolveReport",
    "TargetedPomdp",
    "VerificationResult",
]
