import os
import uuid
from datetime import datetime
from typing import Text

import pytest
import pytz
from dotenv import load_dotenv

from pomsat.pomdp import parse_pomdp
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy

load_dotenv()

test_session_id = (
    datetime.now(tz=pytz.UTC).strftime("%y%m%d%H%M%S")
    + str(uuid.uuid4()).split("-")[0].upper()
)
test_env_vars = {
    "pomsat_logger_name": "pomsat",
    "pomsat_seed": 0,
    "pomsat_use_colors": False,
    "pytest": True,
    "pytest_session": True,
}


def set_test_env_vars():
    for k, v in test_env_vars.items():
        os.environ[k] = str(v)
        os.environ[k.upper()] = str(v)


# The goal is reached with probability 1/2 per step.
M1_TEXT = """\
states: s0 G
actions: a
observations: o0 og
init: s0
goal: G
obs: s0 o0
obs: G og
trans: s0 a s0 1/2
trans: s0 a G 1/2
trans: G a G 1
"""

# A third of the mass falls into the absorbing sink L.
M2_TEXT = """\
states: s0 L G
actions: a
observations: o0 oL og
init: s0
goal: G
obs: s0 o0
obs: L oL
obs: G og
trans: s0 a L 1/3
trans: s0 a G 1/3
trans: s0 a s0 1/3
trans: L a L 1
trans: G a G 1
"""

# Always playing a wins, always playing b loops between s0 and U.
M3_TEXT = """\
states: s0 V U G
actions: a b
observations: o0 oV oU og
init: s0
goal: G
obs: s0 o0
obs: V oV
obs: U oU
obs: G og
trans: s0 a V 1
trans: s0 b U 1
trans: V a U 1/3
trans: V a s0 1/3
trans: V a G 1/3
trans: V b U 1/3
trans: V b s0 1/3
trans: V b G 1/3
trans: U a U 1/2
trans: U a s0 1/2
trans: U b U 1/2
trans: U b s0 1/2
trans: G a G 1
trans: G b G 1
"""


def constant_strategy(p: Pomdp, action: Text) -> FiniteMemoryStrategy:
    """The one-memory-state strategy that always plays ``action``."""

    return FiniteMemoryStrategy(
        mu=1,
        num_observations=p.num_observations,
        num_actions=p.num_actions,
        action_support=(frozenset({p.action_index[action]}),),
        update_support=(
            tuple(
                tuple(frozenset({0}) for _ in range(p.num_actions))
                for _ in range(p.num_observations)
            ),
        ),
        deterministic=True,
    )


@pytest.fixture
def m1_text() -> Text:
    return M1_TEXT


@pytest.fixture
def m2_text() -> Text:
    return M2_TEXT


@pytest.fixture
def m3_text() -> Text:
    return M3_TEXT


@pytest.fixture
def constant_strategy_factory():
    return constant_strategy


@pytest.fixture(scope="session")
def session_id_fixture() -> Text:
    """Generate a unique session ID for test sessions."""

    return test_session_id


@pytest.fixture
def m1() -> Pomdp:
    return parse_pomdp(M1_TEXT)


@pytest.fixture
def m2() -> Pomdp:
    return parse_pomdp(M2_TEXT)


@pytest.fixture
def m3() -> Pomdp:
    return parse_pomdp(M3_TEXT)


@pytest.fixture
def always_a(m3: Pomdp) -> FiniteMemoryStrategy:
    return constant_strategy(m3, "a")


@pytest.fixture
def always_b(m3: Pomdp) -> FiniteMemoryStrategy:
    return constant_strategy(m3, "b")


set_test_env_vars()

__all__ = ["test_session_id"]
