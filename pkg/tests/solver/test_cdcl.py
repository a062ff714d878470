import itertools
import random

import pytest

from pomsat.solver import CdclSolver, luby, solve_embedded, validate_model
from pomsat.types.solver import SatStatus


def _pigeonhole(pigeons: int, holes: int):
    def x(p, h):
        return p * holes + h + 1

    clauses = [[x(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            clauses.append([-x(p, h), -x(q, h)])
    return pigeons * holes, clauses


def _random_3cnf(rng: random.Random, num_vars: int, num_clauses: int):
    return [
        [v if rng.random() < 0.5 else -v for v in rng.sample(range(1, num_vars + 1), 3)]
        for _ in range(num_clauses)
    ]


def _brute_force_sat(num_vars, clauses) -> bool:
    for values in itertools.product([False, True], repeat=num_vars):
        if validate_model(clauses, values):
            return True
    return False


def test_luby_sequence():
    expected = [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]
    assert [luby(i) for i in range(1, 16)] == expected


@pytest.mark.parametrize(
    "num_vars, clauses, expected",
    [
        (1, [[1]], SatStatus.SAT),
        (1, [[1], [-1]], SatStatus.UNSAT),
        (2, [[1, 2], [-1, 2], [1, -2], [-1, -2]], SatStatus.UNSAT),
        (3, [[1, 2, 3], [-1], [-2]], SatStatus.SAT),
        (3, [], SatStatus.SAT),
        (2, [[1, -1], [2]], SatStatus.SAT),
    ],
)
def test_small_formulas(num_vars, clauses, expected):
    outcome = CdclSolver(num_vars, clauses).solve()
    assert outcome.status == expected
    if expected == SatStatus.SAT:
        assert validate_model(clauses, outcome.model)
        assert len(outcome.model) == num_vars


def test_pigeonhole_unsat():
    num_vars, clauses = _pigeonhole(5, 4)
    outcome = CdclSolver(num_vars, clauses).solve()
    assert outcome.status == SatStatus.UNSAT
    assert outcome.stats.conflicts > 0
    assert outcome.model is None


def test_conflict_budget_gives_unknown():
    num_vars, clauses = _pigeonhole(7, 6)
    outcome = solve_embedded(num_vars, clauses, conflict_budget=3)
    assert outcome.status == SatStatus.UNKNOWN
    assert outcome.stats.conflicts == 3


def test_agrees_with_exhaustive_search():
    rng = random.Random(2024)
    for _ in range(60):
        clauses = _random_3cnf(rng, 12, rng.randint(30, 70))
        outcome = CdclSolver(12, clauses, seed=rng.randint(0, 1000)).solve()
        assert (outcome.status == SatStatus.SAT) == _brute_force_sat(12, clauses)
        if outcome.status == SatStatus.SAT:
            assert validate_model(clauses, outcome.model)


def test_restarts_and_learning_on_larger_instance():
    rng = random.Random(7)
    clauses = _random_3cnf(rng, 60, 250)
    outcome = CdclSolver(60, clauses, restart_base=5).solve()
    assert outcome.status in (SatStatus.SAT, SatStatus.UNSAT)
    if outcome.status == SatStatus.SAT:
        assert validate_model(clauses, outcome.model)


def test_same_seed_same_run():
    rng = random.Random(3)
    clauses = _random_3cnf(rng, 40, 170)
    first = CdclSolver(40, clauses, seed=11).solve()
    second = CdclSolver(40, clauses, seed=11).solve()
    assert first.status == second.status
    assert first.model == second.model
    assert first.stats.conflicts == second.stats.conflicts
    assert first.stats.decisions == second.stats.decisions


def test_literal_out_of_range():
    with pytest.raises(ValueError):
        CdclSolver(2, [[3]])
