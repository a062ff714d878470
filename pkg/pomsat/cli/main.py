import functools
import json
import sys
from pathlib import Path
from typing import Callable, Optional, Text, Tuple

import click
from pydantic import ValidationError

from pomsat.exceptions import (
    CapExceeded,
    CnfError,
    InvalidGeometry,
    PomdpError,
    SolverError,
    StrategyError,
    VerificationFailed,
)

EXIT_WINNING = 0
EXIT_NOT_WINNING = 1
EXIT_UNDECIDED = 2
EXIT_INPUT_ERROR = 3
EXIT_SOLVER_ERROR = 4
EXIT_VERIFICATION_FAILED = 5
EXIT_CAP_EXCEEDED = 6

VERDICT_EXIT_CODES = {
    "WINNING": EXIT_WINNING,
    "NO-STRATEGY": EXIT_NOT_WINNING,
    "UNKNOWN": EXIT_UNDECIDED,
    "INCONCLUSIVE": EXIT_UNDECIDED,
}

InputFile = click.Path(exists=True, dir_okay=False, path_type=Path)
OutputFile = click.Path(dir_okay=False, writable=True, path_type=Path)


def exit_on_errors(func: Callable) -> Callable:
    """Report errors on stderr and map them to the documented exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            code = func(*args, **kwargs)
        except VerificationFailed as e:
            click.echo(f"Verification failed: {e}", err=True)
            code = EXIT_VERIFICATION_FAILED
        except (
            PomdpError,
            StrategyError,
            CnfError,
            InvalidGeometry,
            ValidationError,
        ) as e:
            click.echo(f"Invalid input: {e}", err=True)
            code = EXIT_INPUT_ERROR
        except SolverError as e:
            click.echo(f"Solver error: {e}", err=True)
            code = EXIT_SOLVER_ERROR
        except CapExceeded as e:
            click.echo(f"Cap exceeded: {e}", err=True)
            code = EXIT_CAP_EXCEEDED
        sys.exit(code or 0)

    return wrapper


def write_output(path: Optional[Path], text: Text) -> None:
    if path is None:
        click.echo(text, nl=False)
    else:
        path.write_text(text)


def parse_cell(ctx, param, value):
    def one(text: Text) -> Tuple[int, int]:
        try:
            a, b = (int(v) for v in text.split(","))
        except ValueError:
            raise click.BadParameter(f"expected 'a,b', got '{text}'")
        return (a, b)

    if value is None:
        return None
    if isinstance(value, tuple):
        return tuple(one(v) for v in value)
    return one(value)


def read_pomdp(path: Path, strict: bool = False):
    from pomsat.pomdp import parse_pomdp

    return parse_pomdp(path.read_text(), strict=strict)


@click.group()
@click.option("--verbose", "-v", default=False, is_flag=True, help="Debug logging")
def pomsat_cli(verbose: bool = False):
    from pomsat.cli.config import CliSettings, init_logger_config

    settings = CliSettings()
    if verbose:
        settings.logging_level = "DEBUG"
    init_logger_config(settings)


@click.command("version")
@click.option("--short", "-s", default=False, help="Only the number", is_flag=True)
def pkg_version(short: bool = False):
    from pomsat.version import VERSION

    if short is True:
        click.echo(VERSION)
    else:
        click.echo(f"pomsat {VERSION}")


@click.command("solve")
@click.option("--pomdp", "pomdp_path", type=InputFile, required=True)
@click.option("--mu", type=int, default=None, help="Fixed number of memory states")
@click.option("--mu-max", type=int, default=None, help="Search mu = 1..mu-max")
@click.option("--k", type=int, default=None, help="Single path-length horizon")
@click.option("--k-schedule", default=None, help="Horizons, e.g. '2,4,8'")
@click.option("--deterministic", default=False, is_flag=True)
@click.option("--backend", default="embedded", help="embedded or external:<cmd>")
@click.option("--seed", type=int, default=None)
@click.option("--conflict-budget", type=int, default=None)
@click.option(
    "--mu1-mode", type=click.Choice(["observation", "memory"]), default="observation"
)
@click.option("--workers", type=int, default=1, help="Solve horizons in parallel")
@click.option("--strict", default=False, is_flag=True, help="Reject bad goals")
@click.option("--out", type=OutputFile, default=None, help="Strategy file")
@click.option("--dimacs-out", type=OutputFile, default=None)
@click.option("--json-report", type=OutputFile, default=None)
@exit_on_errors
def cmd_solve(
    pomdp_path: Path,
    mu: Optional[int],
    mu_max: Optional[int],
    k: Optional[int],
    k_schedule: Optional[Text],
    deterministic: bool,
    backend: Text,
    seed: Optional[int],
    conflict_budget: Optional[int],
    mu1_mode: Text,
    workers: int,
    strict: bool,
    out: Optional[Path],
    dimacs_out: Optional[Path],
    json_report: Optional[Path],
):
    from pomsat.cnf import to_dimacs
    from pomsat.planner import solve_pomdp
    from pomsat.strategy import dump_strategy
    from pomsat.types.planner import SolveConfig
    from pomsat.utils.common import parse_int_list
    from pomsat.utils.display import display_report

    try:
        schedule = parse_int_list(k_schedule) if k_schedule else None
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--k-schedule")
    config = SolveConfig(
        pomdp_path=pomdp_path,
        mu=mu,
        mu_max=mu_max,
        k=k,
        k_schedule=schedule,
        deterministic=deterministic,
        backend=backend,
        seed=seed,
        conflict_budget=conflict_budget,
        mu1_mode=mu1_mode,
        workers=workers,
        out=out,
        dimacs_out=dimacs_out,
        json_report=json_report,
    )
    p = read_pomdp(pomdp_path, strict=strict)
    report = solve_pomdp(p, config)
    display_report(report)

    if report.strategy is not None and config.out is not None:
        config.out.write_text(dump_strategy(report.strategy, p))
    if report.formula is not None and config.dimacs_out is not None:
        config.dimacs_out.write_text(to_dimacs(report.formula))
    if config.json_report is not None:
        config.json_report.write_text(
            json.dumps(report.to_json_report(), indent=2) + "\n"
        )
    click.echo(report.label)
    return VERDICT_EXIT_CODES[report.verdict]


@click.command("encode")
@click.option("--pomdp", "pomdp_path", type=InputFile, required=True)
@click.option("--k", type=int, required=True)
@click.option("--mu", type=int, default=1)
@click.option("--deterministic", default=False, is_flag=True)
@click.option(
    "--encoding",
    type=click.Choice(["memoryless", "small-memory"]),
    default=None,
    help="Defaults to memoryless for mu = 1",
)
@click.option("--out", type=OutputFile, default=None, help="DIMACS file")
@exit_on_errors
def cmd_encode(
    pomdp_path: Path,
    k: int,
    mu: int,
    deterministic: bool,
    encoding: Optional[Text],
    out: Optional[Path],
):
    from pomsat.cnf import to_dimacs
    from pomsat.config import logger
    from pomsat.encoder import encode
    from pomsat.types.encoder import EncodeParams

    params = EncodeParams(
        k=k,
        mu=mu,
        deterministic=deterministic,
        encoding=encoding or ("memoryless" if mu == 1 else "small-memory"),
    )
    p = read_pomdp(pomdp_path)
    formula, var_map = encode(p, params)
    logger.info(
        f"{params.label}: {formula.num_vars} vars, {formula.num_clauses} clauses"
    )
    write_output(out, to_dimacs(formula, var_map))
    return EXIT_WINNING


@click.command("verify")
@click.option("--pomdp", "pomdp_path", type=InputFile, required=True)
@click.option("--strategy", "strategy_path", type=InputFile, required=True)
@exit_on_errors
def cmd_verify(pomdp_path: Path, strategy_path: Path):
    from pomsat.strategy import load_strategy, verify_almost_sure

    p = read_pomdp(pomdp_path)
    strategy = load_strategy(strategy_path.read_text(), p)
    result = verify_almost_sure(p, strategy)
    if result.winning:
        click.echo("WINNING")
        return EXIT_WINNING
    s, m = result.counterexample or (p.initial, strategy.m0)
    click.echo(f"NOT-WINNING counterexample ({p.states[s]}, m{m})")
    return EXIT_NOT_WINNING


@click.command("baseline")
@click.option("--pomdp", "pomdp_path", type=InputFile, required=True)
@click.option("--node-cap", type=int, default=None)
@click.option("--dump", type=OutputFile, default=None, help="Belief-support MDP")
@exit_on_errors
def cmd_baseline(pomdp_path: Path, node_cap: Optional[int], dump: Optional[Path]):
    from pomsat.baseline import (
        build_belief_support,
        dump_belief_support,
        mdp_almost_sure_reach,
    )

    p = read_pomdp(pomdp_path)
    mdp = build_belief_support(p, node_cap=node_cap)
    winning = mdp.initial in mdp_almost_sure_reach(mdp)
    if dump is not None:
        dump.write_text(dump_belief_support(mdp))
    click.echo(
        f"{'WINNING' if winning else 'NOT-WINNING'} ({mdp.num_nodes} belief supports)"
    )
    return EXIT_WINNING if winning else EXIT_NOT_WINNING


@click.group("gen")
def gen():
    pass


@click.command("hallway")
@click.option("--width", type=int, default=3)
@click.option("--height", type=int, default=4)
@click.option("--barrier", multiple=True, callback=parse_cell, help="x,y")
@click.option("--trap", multiple=True, callback=parse_cell, help="x,y")
@click.option("--goal", default="1,0", callback=parse_cell, help="x,y")
@click.option("--initial", multiple=True, callback=parse_cell, help="x,y")
@click.option("--fail-prob", type=float, default=0.1)
@click.option("--fixture", default=False, is_flag=True, help="The shipped instance")
@click.option("--out", type=OutputFile, default=None)
@exit_on_errors
def gen_hallway_cmd(
    width, height, barrier, trap, goal, initial, fail_prob, fixture, out
):
    from pomsat.benchgen import HALLWAY_FIXTURE, gen_hallway
    from pomsat.pomdp import dump_pomdp
    from pomsat.types.benchgen import HallwayParams

    params = (
        HALLWAY_FIXTURE
        if fixture
        else HallwayParams(
            width=width,
            height=height,
            barriers=frozenset(barrier),
            traps=frozenset(trap),
            goal=goal,
            initial=frozenset(initial),
            fail_prob=fail_prob,
        )
    )
    write_output(out, dump_pomdp(gen_hallway(params)))


@click.command("escape")
@click.option("--n", type=int, default=3, help="Grid columns")
@click.option("--rows", type=int, default=None, help="Grid rows, defaults to n")
@click.option("--robot", default="0,0", callback=parse_cell, help="row,col")
@click.option("--agent", default="2,2", callback=parse_cell, help="row,col")
@click.option("--escape-prob", type=float, default=0.1)
@click.option("--out", type=OutputFile, default=None)
@exit_on_errors
def gen_escape_cmd(n, rows, robot, agent, escape_prob, out):
    from pomsat.benchgen import gen_escape
    from pomsat.pomdp import dump_pomdp
    from pomsat.types.benchgen import EscapeParams

    params = EscapeParams(
        n=n, rows=rows, robot=robot, agent=agent, escape_prob=escape_prob
    )
    write_output(out, dump_pomdp(gen_escape(params)))


@click.command("rocksample")
@click.option("--size", type=int, default=3)
@click.option("--rock", multiple=True, callback=parse_cell, help="row,col")
@click.option(
    "--rock-type",
    multiple=True,
    type=click.Choice(["good", "bad", "unknown"]),
    help="One per --rock, defaults to unknown",
)
@click.option("--rover", default="0,0", callback=parse_cell, help="row,col")
@click.option("--out", type=OutputFile, default=None)
@exit_on_errors
def gen_rocksample_cmd(size, rock, rock_type, rover, out):
    from pomsat.benchgen import gen_rocksample
    from pomsat.pomdp import dump_pomdp
    from pomsat.types.benchgen import RockSampleParams

    params = RockSampleParams(
        size=size,
        rocks=rock,
        rock_types=rock_type or ("unknown",) * len(rock),
        rover=rover,
    )
    write_output(out, dump_pomdp(gen_rocksample(params)))


@click.command("random")
@click.option("--seed", type=int, default=0)
@click.option("--states", type=int, default=4, help="Including the goal")
@click.option("--actions", type=int, default=2)
@click.option("--observations", type=int, default=3, help="Including 'goal'")
@click.option("--max-successors", type=int, default=3)
@click.option("--out", type=OutputFile, default=None)
@exit_on_errors
def gen_random_cmd(seed, states, actions, observations, max_successors, out):
    from pomsat.benchgen import random_pomdp
    from pomsat.pomdp import dump_pomdp
    from pomsat.types.benchgen import RandomPomdpParams

    params = RandomPomdpParams(
        num_states=states,
        num_actions=actions,
        num_observations=observations,
        max_successors=max_successors,
        seed=seed,
    )
    write_output(out, dump_pomdp(random_pomdp(params)))


gen.add_command(gen_hallway_cmd)
gen.add_command(gen_escape_cmd)
gen.add_command(gen_rocksample_cmd)
gen.add_command(gen_random_cmd)

pomsat_cli.add_command(pkg_version)
pomsat_cli.add_command(cmd_solve)
pomsat_cli.add_command(cmd_encode)
pomsat_cli.add_command(cmd_verify)
pomsat_cli.add_command(cmd_baseline)
pomsat_cli.add_command(gen)


if __name__ == "__main__":
    pomsat_cli()
