import pytest
from pydantic import ValidationError

from pomsat.exceptions import DimensionMismatch
from pomsat.strategy import build_product_graph, verify_almost_sure
from pomsat.types.strategy import FiniteMemoryStrategy


def test_m3_always_a_wins(m3, always_a):
    result = verify_almost_sure(m3, always_a)
    assert result.winning
    assert result.counterexample is None
    # s0, V, U and G, all with memory 0.
    assert result.reachable_nodes == 4


def test_m3_always_b_loses_at_u(m3, always_b):
    result = verify_almost_sure(m3, always_b)
    assert not result.winning
    assert result.counterexample == (m3.state_index["U"], 0)
    assert result.describe(m3.states).startswith("losing: (U, m0)")


def test_m2_counterexample_is_the_sink(m2, constant_strategy_factory):
    result = verify_almost_sure(m2, constant_strategy_factory(m2, "a"))
    assert not result.winning
    assert result.counterexample == (m2.state_index["L"], 0)


def test_m1_wins(m1, constant_strategy_factory):
    assert verify_almost_sure(m1, constant_strategy_factory(m1, "a")).winning


def test_observation_based_strategy(m3):
    strategy = FiniteMemoryStrategy(
        mu=1,
        num_observations=m3.num_observations,
        num_actions=m3.num_actions,
        observation_support={
            z: frozenset({0, 1}) for z in range(m3.num_observations)
        },
    )
    assert strategy.is_observation_based
    assert verify_almost_sure(m3, strategy).winning


def test_product_graph_edge_labels(m3, always_a):
    product = build_product_graph(m3, always_a)
    s0, v = m3.state_index["s0"], m3.state_index["V"]
    assert product.graph.edges[(s0, 0), (v, 0)]["labels"] == {(0, 0)}
    assert (m3.goal, 0) in product.reachable
    assert (s0, 0) in product.can_reach_goal


def test_dimension_mismatch(m1, always_a):
    with pytest.raises(DimensionMismatch):
        verify_almost_sure(m1, always_a)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"mu": 1, "action_support": (frozenset(),)},
        {"mu": 1, "action_support": (frozenset({2}),)},
        {"mu": 2, "action_support": (frozenset({0}),)},
        {"mu": 1, "m0": 1, "action_support": (frozenset({0}),)},
        {"mu": 1, "action_support": (frozenset({0, 1}),), "deterministic": True},
    ],
)
def test_invalid_strategies(kwargs):
    update = tuple(
        tuple(tuple(frozenset({0}) for _ in range(2)) for _ in range(2))
        for _ in range(kwargs["mu"])
    )
    with pytest.raises(ValidationError):
        FiniteMemoryStrategy(
            num_observations=2, num_actions=2, update_support=update, **kwargs
        )
