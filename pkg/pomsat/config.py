import logging
from typing import Optional, Text

from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="POMSAT_")

    logger_name: Text = "pomsat"
    debug: bool = False

    # Solver
    seed: int = 0
    conflict_budget: Optional[int] = None
    restart_base: int = 100
    external_solver_timeout: float = 600.0

    # Caps
    brute_force_cap: int = 10**7
    belief_node_cap: int = 2**22

    # Models
    probability_tolerance: float = 1e-9


settings = Settings()

logger = logging.getLogger(settings.logger_name)
console = Console()
