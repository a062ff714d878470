from pomsat.planner.driver import encode_params, run_attempt, solve_pomdp
from pomsat.planner.schedule import complete_horizon, k_schedule

__all__ = [
    "complete_horizon",
    "encode_params",
    "k_schedule",
    "run_attempt",
    "solve_pomdp",
]
