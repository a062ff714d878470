from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from pomsat.cnf import CnfFormula, VarMap
from pomsat.config import logger
from pomsat.encoder import encode
from pomsat.exceptions import VerificationFailed
from pomsat.planner.schedule import complete_horizon, k_schedule
from pomsat.solver import solve
from pomsat.strategy import extract_strategy, verify_almost_sure
from pomsat.types.encoder import EncodeParams
from pomsat.types.planner import Attempt, SolveConfig, SolveReport
from pomsat.types.pomdp import Pomdp
from pomsat.types.solver import SatOutcome, SatStatus
from pomsat.types.strategy import FiniteMemoryStrategy
from pomsat.utils.common import stopwatch

Run = Tuple[Attempt, SatOutcome, CnfFormula, VarMap, EncodeParams]


def encode_params(config: SolveConfig, mu: int, k: int) -> EncodeParams:
    memoryless = mu == 1 and config.mu1_mode == "observation"
    return EncodeParams(
        k=k,
        mu=mu,
        deterministic=config.deterministic,
        encoding="memoryless" if memoryless else "small-memory",
        both_directions=config.both_directions,
    )


def run_attempt(p: Pomdp, config: SolveConfig, mu: int, k: int) -> Run:
    """Encode and solve one ``(mu, k)`` instance."""

    params = encode_params(config, mu, k)
    with stopwatch() as encoding:
        formula, var_map = encode(p, params)
    with stopwatch() as solving:
        outcome = solve(
            formula,
            config.backend,
            seed=config.seed,
            conflict_budget=config.conflict_budget,
        )
    attempt = Attempt(
        mu=mu,
        k=k,
        encoding=params.encoding,
        status=outcome.status,
        vars=formula.num_vars,
        clauses=formula.num_clauses,
        encode_ms=encoding.elapsed_ms,
        solve_ms=solving.elapsed_ms,
        solver_stats=outcome.stats,
    )
    logger.debug(
        f"{params.label}: {attempt.status.value} with {attempt.vars} vars, "
        + f"{attempt.clauses} clauses (encode {attempt.encode_ms:.1f} ms, "
        + f"solve {attempt.solve_ms:.1f} ms)"
    )
    return attempt, outcome, formula, var_map, params


def _decisive_runs(p: Pomdp, config: SolveConfig, mu: int, ks: List[int]) -> List[Run]:
    """Runs over ``ks`` up to and including the first non-UNSAT one.

    With several workers the horizons are solved concurrently, pending larger
    horizons are cancelled once a smaller one is decisive.
    """

    runs: List[Run] = []
    if config.workers <= 1 or len(ks) <= 1:
        for k in ks:
            runs.append(run_attempt(p, config, mu, k))
            if runs[-1][0].status != SatStatus.UNSAT:
                break
        return runs

    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = [executor.submit(run_attempt, p, config, mu, k) for k in ks]
        for i, future in enumerate(futures):
            runs.append(future.result())
            if runs[-1][0].status != SatStatus.UNSAT:
                cancelled = sum(later.cancel() for later in futures[i + 1 :])
                if cancelled:
                    logger.debug(f"mu={mu}: cancelled {cancelled} pending horizon(s)")
                break
    return runs


def solve_pomdp(p: Pomdp, config: Optional[SolveConfig] = None) -> SolveReport:
    """Search memory sizes in ascending order and horizons per the schedule.

    The first SAT answer is extracted and verified. UNSAT at the complete
    horizon ``|S| * mu`` rules out memory size ``mu``, UNSAT only at smaller
    horizons leaves the answer for ``mu`` inconclusive. UNKNOWN stops the
    search.
    """

    config = config or SolveConfig()
    attempts: List[Attempt] = []
    inconclusive = False
    last: Optional[Run] = None
    strategy: Optional[FiniteMemoryStrategy] = None
    with stopwatch() as total:
        for mu in config.mu_values():
            ks = k_schedule(p.num_states, mu, config.explicit_schedule())
            runs = _decisive_runs(p, config, mu, ks)
            attempts.extend(run[0] for run in runs)
            last = runs[-1]
            attempt, outcome, formula, var_map, params = last
            if attempt.status == SatStatus.SAT:
                assert outcome.model is not None
                strategy = extract_strategy(outcome.model, var_map, params, p)
                result = verify_almost_sure(p, strategy)
                if not result.winning:
                    raise VerificationFailed(
                        f"Extracted strategy for mu={mu}, k={attempt.k} is "
                        + result.describe(p.states)
                    )
                break
            if attempt.status == SatStatus.UNKNOWN:
                logger.warning(
                    f"Solver gave up at mu={mu}, k={attempt.k}, stopping the search"
                )
                break
            if attempt.k < complete_horizon(p.num_states, mu):
                inconclusive = True
                logger.info(
                    f"mu={mu}: UNSAT up to k={attempt.k}, below the complete "
                    + f"horizon {complete_horizon(p.num_states, mu)}"
                )
            else:
                logger.info(f"mu={mu}: no winning strategy with {mu} memory states")

    assert last is not None
    attempt, outcome, formula, _, _ = last
    if attempt.status == SatStatus.SAT:
        verdict = "WINNING"
    elif attempt.status == SatStatus.UNKNOWN:
        verdict = "UNKNOWN"
    else:
        verdict = "INCONCLUSIVE" if inconclusive else "NO-STRATEGY"
    report = SolveReport(
        verdict=verdict,
        mu=attempt.mu,
        k=attempt.k,
        vars=attempt.vars,
        clauses=attempt.clauses,
        solver_stats=attempt.solver_stats,
        time_ms=total.elapsed_ms,
        attempts=attempts,
        strategy=strategy,
        formula=formula,
    )
    logger.info(f"Verdict {report.label} after {len(attempts)} solver call(s)")
    return report
