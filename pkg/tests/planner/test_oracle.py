import pytest

from pomsat.baseline import baseline_decide
from pomsat.benchgen import random_corpus
from pomsat.planner import solve_pomdp
from pomsat.pomdp import parse_pomdp, perturb_probabilities
from pomsat.strategy import brute_force_exists, verify_almost_sure
from pomsat.types.planner import SolveConfig

# Only a coin flip at observation o wins without memory.
MIXING_TEXT = """\
states: s0 s1 G
actions: a b
observations: o og
init: s0
goal: G
obs: s0 o
obs: s1 o
obs: G og
trans: s0 a s1 1
trans: s0 b s0 1
trans: s1 a s1 1
trans: s1 b G 1
trans: G a G 1
trans: G b G 1
"""


@pytest.fixture(scope="module")
def corpus():
    return random_corpus(200, seed=11)


@pytest.fixture(scope="module")
def baselines(corpus):
    return [baseline_decide(p) for p in corpus]


@pytest.fixture(scope="module")
def memoryless_reports(corpus):
    return [solve_pomdp(p, SolveConfig(mu=1)) for p in corpus]


@pytest.fixture(scope="module")
def two_memory_reports(corpus):
    return [solve_pomdp(p, SolveConfig(mu=2)) for p in corpus]


def test_memoryless_matches_enumeration(corpus, memoryless_reports):
    for p, report in zip(corpus, memoryless_reports):
        assert report.verdict in ("WINNING", "NO-STRATEGY")
        assert (report.verdict == "WINNING") == brute_force_exists(p, 1)


def test_two_memory_states_match_enumeration(corpus, two_memory_reports):
    for p, report in zip(corpus, two_memory_reports):
        assert report.verdict in ("WINNING", "NO-STRATEGY")
        assert (report.verdict == "WINNING") == brute_force_exists(p, 2)


@pytest.mark.parametrize("reports", ["memoryless_reports", "two_memory_reports"])
def test_extracted_strategies_win(corpus, reports, request):
    for p, report in zip(corpus, request.getfixturevalue(reports)):
        if report.verdict == "WINNING":
            assert verify_almost_sure(p, report.strategy).winning


@pytest.mark.parametrize("reports", ["memoryless_reports", "two_memory_reports"])
def test_winning_implies_belief_support_winning(baselines, reports, request):
    for baseline, report in zip(baselines, request.getfixturevalue(reports)):
        if report.verdict == "WINNING":
            assert baseline.winning
        if not baseline.winning:
            assert report.verdict == "NO-STRATEGY"


def test_verdicts_ignore_probabilities(corpus, memoryless_reports):
    for i, (p, report) in enumerate(zip(corpus[:20], memoryless_reports)):
        perturbed = perturb_probabilities(p, seed=i)
        assert solve_pomdp(perturbed, SolveConfig(mu=1)).verdict == report.verdict


def test_mixing_needs_randomness():
    p = parse_pomdp(MIXING_TEXT)
    assert solve_pomdp(p, SolveConfig(mu=1)).verdict == "WINNING"
    assert (
        solve_pomdp(p, SolveConfig(mu=1, deterministic=True)).verdict
        == "NO-STRATEGY"
    )
    report = solve_pomdp(p, SolveConfig(mu=2, deterministic=True))
    assert report.verdict == "WINNING"
    assert report.strategy.deterministic
