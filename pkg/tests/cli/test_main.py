import json
import logging

import pytest
from click.testing import CliRunner

from pomsat.cli.main import (
    EXIT_CAP_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_NOT_WINNING,
    EXIT_SOLVER_ERROR,
    EXIT_UNDECIDED,
    EXIT_WINNING,
    pomsat_cli,
)
from pomsat.cnf import parse_dimacs
from pomsat.config import settings
from pomsat.encoder import encode
from pomsat.pomdp import parse_pomdp
from pomsat.strategy import dump_strategy
from pomsat.types.encoder import EncodeParams
from pomsat.version import VERSION


@pytest.fixture(autouse=True)
def restore_logger():
    logger = logging.getLogger(settings.logger_name)
    handlers, level, propagate = logger.handlers[:], logger.level, logger.propagate
    yield
    logger.handlers[:] = handlers
    logger.setLevel(level)
    logger.propagate = propagate


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def documents(tmp_path, m1_text, m2_text, m3_text):
    paths = {}
    for name, text in (("m1", m1_text), ("m2", m2_text), ("m3", m3_text)):
        paths[name] = tmp_path / f"{name}.pomdp"
        paths[name].write_text(text)
    paths["broken"] = tmp_path / "broken.pomdp"
    paths["broken"].write_text(m3_text.replace("trans: U b s0 1/2", ""))
    return paths


def test_version(runner):
    assert runner.invoke(pomsat_cli, ["version"]).output == f"pomsat {VERSION}\n"
    assert runner.invoke(pomsat_cli, ["version", "-s"]).output == f"{VERSION}\n"


@pytest.mark.parametrize(
    "name, extra, code, label",
    [
        ("m3", [], EXIT_WINNING, "WINNING(1, 4)"),
        ("m1", ["--k", "1"], EXIT_WINNING, "WINNING(1, 1)"),
        ("m2", ["--mu-max", "2"], EXIT_NOT_WINNING, "NO-STRATEGY(2)"),
        ("m2", ["--k", "1"], EXIT_UNDECIDED, "INCONCLUSIVE"),
    ],
)
def test_solve_verdicts(runner, documents, name, extra, code, label):
    args = ["solve", "--pomdp", str(documents[name])] + extra
    result = runner.invoke(pomsat_cli, args)
    assert result.exit_code == code
    assert result.output.rstrip().endswith(label)


def test_solve_outputs_then_verify(runner, documents, tmp_path):
    strategy, dimacs, report = (
        tmp_path / "strategy.txt",
        tmp_path / "formula.cnf",
        tmp_path / "report.json",
    )
    result = runner.invoke(
        pomsat_cli,
        [
            "solve",
            "--pomdp",
            str(documents["m3"]),
            "--mu",
            "2",
            "--k-schedule",
            "2,4,8",
            "--out",
            str(strategy),
            "--dimacs-out",
            str(dimacs),
            "--json-report",
            str(report),
        ],
    )
    assert result.exit_code == EXIT_WINNING
    document = json.loads(report.read_text())
    assert document["verdict"] == "WINNING"
    assert document["mu"] == 2
    num_vars, clauses = parse_dimacs(dimacs.read_text())
    assert num_vars == document["vars"]
    assert len(clauses) == document["clauses"]
    assert strategy.read_text().startswith("mu: 2\n")

    verified = runner.invoke(
        pomsat_cli,
        ["verify", "--pomdp", str(documents["m3"]), "--strategy", str(strategy)],
    )
    assert verified.exit_code == EXIT_WINNING
    assert verified.output.strip() == "WINNING"


@pytest.mark.parametrize(
    "extra",
    [
        ["--k", "2", "--k-schedule", "2,4"],
        ["--k-schedule", "4,2"],
        ["--mu", "1", "--mu-max", "2"],
        ["--backend", "cryptominisat"],
    ],
)
def test_solve_rejects_bad_options(runner, documents, extra):
    args = ["solve", "--pomdp", str(documents["m3"])] + extra
    result = runner.invoke(pomsat_cli, args)
    assert result.exit_code == EXIT_INPUT_ERROR


def test_solve_rejects_broken_document(runner, documents):
    result = runner.invoke(pomsat_cli, ["solve", "--pomdp", str(documents["broken"])])
    assert result.exit_code == EXIT_INPUT_ERROR
    assert "Invalid input" in result.output


def test_solve_with_missing_external_solver(runner, documents):
    result = runner.invoke(
        pomsat_cli,
        [
            "solve",
            "--pomdp",
            str(documents["m3"]),
            "--backend",
            "external:/nonexistent/solver-binary",
        ],
    )
    assert result.exit_code == EXIT_SOLVER_ERROR


def test_encode(runner, documents, m3):
    args = ["encode", "--pomdp", str(documents["m3"]), "--k", "3"]
    first = runner.invoke(pomsat_cli, args)
    second = runner.invoke(pomsat_cli, args)
    assert first.exit_code == EXIT_WINNING
    formula, _ = encode(m3, EncodeParams(k=3, encoding="memoryless"))
    dimacs = first.output[first.output.index("c ") :]
    assert dimacs == second.output[second.output.index("c ") :]
    assert f"p cnf {formula.num_vars} {formula.num_clauses}\n" in dimacs


def test_encode_to_file(runner, documents, tmp_path):
    out = tmp_path / "m3.cnf"
    result = runner.invoke(
        pomsat_cli,
        ["encode", "--pomdp", str(documents["m3"]), "--k", "4", "--mu", "2"]
        + ["--out", str(out)],
    )
    assert result.exit_code == EXIT_WINNING
    num_vars, clauses = parse_dimacs(out.read_text())
    assert num_vars > 0 and clauses


def test_encode_rejects_zero_horizon(runner, documents):
    result = runner.invoke(
        pomsat_cli, ["encode", "--pomdp", str(documents["m3"]), "--k", "0"]
    )
    assert result.exit_code == EXIT_INPUT_ERROR


def test_verify_losing_strategy(runner, documents, m3, always_b, tmp_path):
    path = tmp_path / "always_b.txt"
    path.write_text(dump_strategy(always_b, m3))
    args = ["verify", "--pomdp", str(documents["m3"]), "--strategy", str(path)]
    result = runner.invoke(pomsat_cli, args)
    assert result.exit_code == EXIT_NOT_WINNING
    assert "NOT-WINNING counterexample (U, m0)" in result.output

    path.write_text(dump_strategy(always_b, m3).replace("mu: 1", "mu: 2"))
    assert runner.invoke(pomsat_cli, args).exit_code == EXIT_INPUT_ERROR


def test_baseline(runner, documents, tmp_path):
    dump = tmp_path / "supports.txt"
    result = runner.invoke(
        pomsat_cli,
        ["baseline", "--pomdp", str(documents["m3"]), "--dump", str(dump)],
    )
    assert result.exit_code == EXIT_WINNING
    assert "WINNING (4 belief supports)" in result.output
    assert dump.read_text().startswith("nodes: 4\n")

    result = runner.invoke(pomsat_cli, ["baseline", "--pomdp", str(documents["m2"])])
    assert result.exit_code == EXIT_NOT_WINNING
    assert "NOT-WINNING" in result.output

    result = runner.invoke(
        pomsat_cli, ["baseline", "--pomdp", str(documents["m3"]), "--node-cap", "1"]
    )
    assert result.exit_code == EXIT_CAP_EXCEEDED


@pytest.mark.parametrize(
    "args, num_states",
    [
        (["hallway", "--fixture"], 15),
        (["escape"], 74),
        (["escape", "--rows", "1", "--agent", "0,1"], 8),
        (["random", "--seed", "3", "--states", "5"], 5),
    ],
)
def test_gen(runner, args, num_states):
    result = runner.invoke(pomsat_cli, ["gen"] + args)
    assert result.exit_code == 0
    assert parse_pomdp(result.output, strict=True).num_states == num_states


def test_gen_hallway_options(runner):
    result = runner.invoke(
        pomsat_cli,
        ["gen", "hallway", "--width", "3", "--height", "2", "--goal", "2,0"]
        + ["--initial", "0,1", "--trap", "1,1"],
    )
    assert result.exit_code == 0
    p = parse_pomdp(result.output)
    assert "lost" in p.states
    assert p.num_states == 19


def test_gen_rocksample_to_file(runner, tmp_path):
    out = tmp_path / "rocks.pomdp"
    result = runner.invoke(
        pomsat_cli,
        ["gen", "rocksample", "--rock", "1,1", "--rock", "1,2"]
        + ["--rock-type", "good", "--rock-type", "good", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert "1_1_gg_f" in parse_pomdp(out.read_text()).states


def test_gen_rejects_bad_geometry(runner):
    result = runner.invoke(pomsat_cli, ["gen", "escape", "--robot", "2,2"])
    assert result.exit_code == EXIT_INPUT_ERROR
    result = runner.invoke(pomsat_cli, ["gen", "rocksample", "--rock", "1,1"])
    assert result.exit_code == EXIT_INPUT_ERROR
