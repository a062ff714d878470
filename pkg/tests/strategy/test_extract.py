import pytest

from pomsat.encoder import encode
from pomsat.exceptions import EmptySupport
from pomsat.solver import solve
from pomsat.strategy import extract_strategy, verify_almost_sure
from pomsat.types.encoder import EncodeParams
from pomsat.types.solver import SatStatus


@pytest.mark.parametrize(
    "params",
    [
        EncodeParams(k=3, encoding="memoryless"),
        EncodeParams(k=3, encoding="memoryless", deterministic=True),
        EncodeParams(k=4, mu=1),
        EncodeParams(k=4, mu=2),
        EncodeParams(k=4, mu=2, deterministic=True),
    ],
)
def test_extracted_strategies_win(m3, params):
    formula, var_map = encode(m3, params)
    outcome = solve(formula)
    assert outcome.status == SatStatus.SAT
    strategy = extract_strategy(outcome.model, var_map, params, m3)
    assert strategy.mu == params.mu
    assert strategy.is_observation_based == (params.encoding == "memoryless")
    if params.deterministic:
        assert strategy.deterministic
    assert verify_almost_sure(m3, strategy).winning


def test_memoryless_strategy_plays_a_at_s0(m3):
    params = EncodeParams(k=3, encoding="memoryless", deterministic=True)
    formula, var_map = encode(m3, params)
    strategy = extract_strategy(solve(formula).model, var_map, params, m3)
    s0 = m3.state_index["s0"]
    assert strategy.actions_at(0, m3.observation_of[s0]) == frozenset({0})


def test_empty_support_is_rejected(m3):
    params = EncodeParams(k=3, mu=2)
    formula, var_map = encode(m3, params)
    model = [False] * formula.num_vars
    with pytest.raises(EmptySupport):
        extract_strategy(model, var_map, params, m3)
