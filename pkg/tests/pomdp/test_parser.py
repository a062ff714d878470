import pytest

from pomsat.benchgen import (
    ESCAPE_FIXTURE,
    HALLWAY_FIXTURE,
    ROCKSAMPLE_FIXTURE,
    gen_escape,
    gen_hallway,
    gen_rocksample,
)
from pomsat.exceptions import PomdpSyntaxError, PomdpValidationError
from pomsat.pomdp import dump_pomdp, parse_pomdp


def test_parse_m1(m1_text):
    p = parse_pomdp(m1_text)
    assert p.states == ("s0", "G")
    assert p.actions == ("a",)
    assert p.goal == p.state_index["G"]
    assert p.initial == p.state_index["s0"]
    assert dict(p.transitions[0][0]) == {0: 0.5, 1: 0.5}


def test_parse_fractions(m2_text):
    p = parse_pomdp(m2_text)
    s0 = p.state_index["s0"]
    assert sum(prob for _, prob in p.transitions[s0][0]) == pytest.approx(1.0)
    assert p.supports[s0][0] == (0, 1, 2)


def test_dump_then_parse_keeps_the_model(m3):
    again = parse_pomdp(dump_pomdp(m3))
    assert again.states == m3.states
    assert again.observation_of == m3.observation_of
    assert again.transitions == m3.transitions
    assert again.goal == m3.goal


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("states: s0\nfoo: bar\n", 2, 1),
        ("states: s0\nactions: a\ntrans: s0 a s1 1\n", 3, 13),
        ("states: s0 s0\n", 1, 12),
        ("states: s0\ninit: s0 s0\n", 2, 10),
        ("states: s0\nactions: a\ntrans: s0 a s0 half\n", 3, 16),
        ("init: s0\n", 1, 1),
        ("", 1, 1),
        ("# nothing here\n\n", 1, 1),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(PomdpSyntaxError) as exc_info:
        parse_pomdp(text)
    assert exc_info.value.line == line
    assert exc_info.value.column == column
    assert str(exc_info.value).startswith(f"line {line}, col {column}: ")


def test_probabilities_must_sum_to_one(m1_text):
    text = m1_text.replace("trans: s0 a G 1/2", "trans: s0 a G 1/4")
    with pytest.raises(PomdpValidationError, match="sum to 0.75"):
        parse_pomdp(text)


def test_missing_observation(m1_text):
    with pytest.raises(PomdpValidationError, match="has no observation"):
        parse_pomdp(m1_text.replace("obs: s0 o0\n", ""))


def test_missing_transition_row(m1_text):
    text = m1_text.replace("trans: s0 a s0 1/2\ntrans: s0 a G 1/2\n", "")
    with pytest.raises(PomdpValidationError, match="No transitions"):
        parse_pomdp(text)


def test_missing_declaration():
    with pytest.raises(PomdpValidationError, match="Missing 'goal'"):
        parse_pomdp("states: s0\nactions: a\nobservations: o\ninit: s0\n")


def test_non_absorbing_goal(m1_text):
    text = m1_text.replace("trans: G a G 1", "trans: G a s0 1")
    with pytest.raises(PomdpValidationError, match="not absorbing"):
        parse_pomdp(text, strict=True)

    p = parse_pomdp(text)
    assert p.num_states == 3
    assert p.states[p.goal] == "G_1"
    assert p.observations[p.observation_of[p.goal]] == "goal"
    old_goal = p.state_index["G"]
    assert p.supports[old_goal] == ((p.goal,),)


def test_goal_sharing_its_observation_is_normalized(m1_text):
    p = parse_pomdp(m1_text.replace("obs: G og", "obs: G o0"))
    assert p.num_states == 3
    assert p.states[p.goal] == "G_1"
    assert len(p.states_with_observation(p.observation_of[p.goal])) == 1


def test_comments_and_blank_lines(m1_text):
    text = "# a comment\n\n" + m1_text.replace("init: s0", "init: s0  # start")
    assert parse_pomdp(text).states == ("s0", "G")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("states: s0\nobservations: o\nactions: a\n", 3, 1),
        ("states: s0\nactions: a\nobservations: o\ngoal: s0\ninit: s0\n", 5, 1),
        (
            "states: s0 G\nactions: a\nobservations: o\ninit: s0\ngoal: G\n"
            + "trans: s0 a G 1\nobs: s0 o\n",
            7,
            1,
        ),
    ],
)
def test_sections_out_of_order(text, line, column):
    with pytest.raises(PomdpSyntaxError, match="must come before") as exc_info:
        parse_pomdp(text)
    assert exc_info.value.line == line
    assert exc_info.value.column == column


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("states: s-0 G\n", 1, 9),
        ("states: s0\nactions: go!\n", 2, 10),
        ("states: s0\nactions: a\nobservations: o.1\n", 3, 15),
        ("states: s0\nactions: a\ntrans: s0 a s* 1\n", 3, 13),
    ],
)
def test_identifiers_are_alphanumeric(text, line, column):
    with pytest.raises(PomdpSyntaxError, match="Invalid identifier") as exc_info:
        parse_pomdp(text)
    assert exc_info.value.line == line
    assert exc_info.value.column == column


@pytest.mark.parametrize(
    "generate, params",
    [
        (gen_hallway, HALLWAY_FIXTURE),
        (gen_escape, ESCAPE_FIXTURE),
        (gen_rocksample, ROCKSAMPLE_FIXTURE),
    ],
)
def test_generated_models_parse_back(generate, params):
    p = generate(params)
    again = parse_pomdp(dump_pomdp(p), strict=True)
    assert again.states == p.states
    assert again.observations == p.observations
    assert again.transitions == p.transitions
