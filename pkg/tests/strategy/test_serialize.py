import pytest

from pomsat.exceptions import DimensionMismatch, EmptySupport, StrategySyntaxError
from pomsat.strategy import dump_strategy, load_strategy
from pomsat.types.strategy import FiniteMemoryStrategy


def test_dump_format(m3, always_a):
    text = dump_strategy(always_a, m3)
    assert text.startswith("mu: 1\nm0: 0\ndeterministic: true\nmode: memory\n")
    assert "actions:\n  0: a\n" in text
    assert "  0 oU b: 0\n" in text


def test_load_reads_dump(m3, always_b):
    assert load_strategy(dump_strategy(always_b, m3), m3) == always_b


def test_observation_mode(m3):
    strategy = FiniteMemoryStrategy(
        mu=1,
        num_observations=m3.num_observations,
        num_actions=m3.num_actions,
        observation_support={
            0: frozenset({0}),
            1: frozenset({0, 1}),
            2: frozenset({1}),
            3: frozenset({0}),
        },
    )
    text = dump_strategy(strategy, m3)
    assert "mode: observation" in text
    assert "  oV: a b\n" in text
    loaded = load_strategy(text, m3)
    assert loaded.observation_support == strategy.observation_support


@pytest.mark.parametrize(
    "change, error",
    [
        (("mu: 1", "mu: 2"), DimensionMismatch),
        (("mode: memory\n", ""), StrategySyntaxError),
        (("  0: a", "  0: c"), StrategySyntaxError),
        (("  0: a", "  0:"), EmptySupport),
        (("  0 oU b: 0\n", ""), DimensionMismatch),
        (("  0 oU b: 0", "  3 oU b: 0"), DimensionMismatch),
        (("actions:", "strategy:"), StrategySyntaxError),
    ],
)
def test_load_errors(m3, always_a, change, error):
    text = dump_strategy(always_a, m3).replace(*change)
    with pytest.raises(error):
        load_strategy(text, m3)


def test_load_against_other_model(m1, m3, always_a):
    with pytest.raises(StrategySyntaxError):
        load_strategy(dump_strategy(always_a, m3), m1)
