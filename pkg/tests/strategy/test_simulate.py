import pytest

from pomsat.strategy import simulate_play, uniform_distribution


def test_uniform_distribution():
    assert uniform_distribution(frozenset({2, 0})) == {0: 0.5, 2: 0.5}
    with pytest.raises(ValueError):
        uniform_distribution(frozenset())


def test_winning_strategy_reaches_goal(m3, always_a):
    for seed in range(5):
        play = simulate_play(m3, always_a, seed=seed)
        assert play.reached_goal
        assert play.states[-1] == m3.goal
        assert len(play.states) == play.steps + 1


def test_losing_strategy_never_reaches_goal(m3, always_b):
    play = simulate_play(m3, always_b, seed=1, max_steps=50)
    assert not play.reached_goal
    assert play.steps == 50
    assert set(play.states) == {m3.state_index["s0"], m3.state_index["U"]}


def test_same_seed_same_play(m3, always_a):
    assert simulate_play(m3, always_a, seed=3) == simulate_play(m3, always_a, seed=3)
