import re
from fractions import Fraction
from typing import Dict, List, Optional, Text, Tuple

from pomsat.config import logger
from pomsat.exceptions import PomdpSyntaxError, PomdpValidationError
from pomsat.pomdp.core import make_targeted_pomdp, normalize_goal
from pomsat.types.pomdp import Pomdp

TOKEN_PATTERN = re.compile(r"\S+")
IDENTIFIER_PATTERN = re.compile(r"[A-Za-z0-9_]+")
KEYWORDS = ("states", "actions", "observations", "init", "goal", "obs", "trans")

Token = Tuple[Text, int]


def _tokenize(line: Text) -> List[Token]:
    line = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in TOKEN_PATTERN.finditer(line)]


def _check_identifier(token: Token, lineno: int) -> Text:
    name, col = token
    if not IDENTIFIER_PATTERN.fullmatch(name):
        raise PomdpSyntaxError(f"Invalid identifier '{name}'", lineno, col)
    return name


def _parse_probability(token: Token, lineno: int) -> float:
    text, col = token
    try:
        value = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise PomdpSyntaxError(f"Invalid probability '{text}'", lineno, col)
    return value


class _Document:
    def __init__(self):
        self.states: Optional[List[Text]] = None
        self.actions: Optional[List[Text]] = None
        self.observations: Optional[List[Text]] = None
        self.initial: Optional[Text] = None
        self.goal: Optional[Text] = None
        self.observation_of: Dict[int, int] = {}
        self.transitions: Dict[Tuple[int, int], Dict[int, float]] = {}
        self.state_index: Dict[Text, int] = {}
        self.action_index: Dict[Text, int] = {}
        self.observation_index: Dict[Text, int] = {}

    def lookup(
        self, table: Dict[Text, int], token: Token, what: Text, lineno: int
    ) -> int:
        name = _check_identifier(token, lineno)
        if name not in table:
            raise PomdpSyntaxError(f"Unknown {what} '{name}'", lineno, token[1])
        return table[name]

    def require(self, attr: Text, lineno: int) -> None:
        if getattr(self, attr) is None:
            raise PomdpSyntaxError(f"'{attr}' must be declared first", lineno, 1)


def _declare(
    doc: _Document, attr: Text, index_attr: Text, args: List[Token], lineno: int
) -> None:
    if getattr(doc, attr) is not None:
        raise PomdpSyntaxError(f"Duplicate '{attr}' declaration", lineno, 1)
    if not args:
        raise PomdpSyntaxError(f"Empty '{attr}' declaration", lineno, 1)
    names: List[Text] = []
    index: Dict[Text, int] = {}
    for token in args:
        name = _check_identifier(token, lineno)
        if name in index:
            raise PomdpSyntaxError(f"Duplicate name '{name}'", lineno, token[1])
        index[name] = len(names)
        names.append(name)
    setattr(doc, attr, names)
    setattr(doc, index_attr, index)


def _expect_arity(args: List[Token], n: int, keyword: Text, lineno: int) -> None:
    if len(args) != n:
        col = args[n][1] if len(args) > n else 1
        raise PomdpSyntaxError(
            f"'{keyword}' expects {n} argument(s), got {len(args)}", lineno, col
        )


def parse_pomdp(text: Text, strict: bool = False) -> Pomdp:
    """Parse the line-oriented POMDP text format.

    With ``strict`` a goal state that is not absorbing is rejected, otherwise
    the goal is normalized into an absorbing one.
    """

    doc = _Document()
    last_section = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        (head, col) = tokens[0]
        if not head.endswith(":") or head[:-1] not in KEYWORDS:
            raise PomdpSyntaxError(f"Unknown keyword '{head}'", lineno, col)
        keyword = head[:-1]
        section = KEYWORDS.index(keyword)
        if section < last_section:
            raise PomdpSyntaxError(
                f"'{keyword}' must come before '{KEYWORDS[last_section]}'", lineno, col
            )
        last_section = section
        args = tokens[1:]

        if keyword == "states":
            _declare(doc, "states", "state_index", args, lineno)
        elif keyword == "actions":
            _declare(doc, "actions", "action_index", args, lineno)
        elif keyword == "observations":
            _declare(doc, "observations", "observation_index", args, lineno)
        elif keyword in ("init", "goal"):
            doc.require("states", lineno)
            _expect_arity(args, 1, keyword, lineno)
            if getattr(doc, "initial" if keyword == "init" else "goal") is not None:
                raise PomdpSyntaxError(f"Duplicate '{keyword}'", lineno, col)
            doc.lookup(doc.state_index, args[0], "state", lineno)
            setattr(doc, "initial" if keyword == "init" else "goal", args[0][0])
        elif keyword == "obs":
            doc.require("states", lineno)
            doc.require("observations", lineno)
            _expect_arity(args, 2, keyword, lineno)
            s = doc.lookup(doc.state_index, args[0], "state", lineno)
            z = doc.lookup(doc.observation_index, args[1], "observation", lineno)
            if s in doc.observation_of:
                raise PomdpSyntaxError(
                    f"Duplicate observation for state '{args[0][0]}'", lineno, col
                )
            doc.observation_of[s] = z
        else:
            doc.require("states", lineno)
            doc.require("actions", lineno)
            _expect_arity(args, 4, keyword, lineno)
            s = doc.lookup(doc.state_index, args[0], "state", lineno)
            a = doc.lookup(doc.action_index, args[1], "action", lineno)
            succ = doc.lookup(doc.state_index, args[2], "state", lineno)
            prob = _parse_probability(args[3], lineno)
            row = doc.transitions.setdefault((s, a), {})
            if succ in row:
                raise PomdpSyntaxError(
                    f"Duplicate transition ({args[0][0]}, {args[1][0]}, "
                    + f"{args[2][0]})",
                    lineno,
                    col,
                )
            row[succ] = prob

    if last_section < 0:
        raise PomdpSyntaxError("Empty document", 1, 1)
    for attr in ("states", "actions", "observations", "initial", "goal"):
        if getattr(doc, attr) is None:
            raise PomdpValidationError(f"Missing '{attr}' declaration")
    assert doc.states is not None and doc.actions is not None
    assert doc.observations is not None and doc.goal is not None
    assert doc.initial is not None
    for s, name in enumerate(doc.states):
        if s not in doc.observation_of:
            raise PomdpValidationError(f"State '{name}' has no observation")

    targeted = make_targeted_pomdp(
        states=doc.states,
        actions=doc.actions,
        observations=doc.observations,
        transitions=[
            [
                tuple(doc.transitions.get((s, a), {}).items())
                for a in range(len(doc.actions))
            ]
            for s in range(len(doc.states))
        ],
        observation_of=[doc.observation_of[s] for s in range(len(doc.states))],
        initial=doc.state_index[doc.initial],
        targets=[doc.state_index[doc.goal]],
    )
    goal = doc.state_index[doc.goal]
    if not targeted.is_absorbing(goal):
        if strict:
            raise PomdpValidationError(f"Goal state '{doc.goal}' is not absorbing")
        logger.warning(f"Goal state '{doc.goal}' is not absorbing, normalizing")
    elif len(targeted.states_with_observation(targeted.observation_of[goal])) > 1:
        logger.warning(f"Goal state '{doc.goal}' shares its observation, normalizing")
    return normalize_goal(targeted)


def dump_pomdp(pomdp: Pomdp) -> Text:
    lines = [
        "states: " + " ".join(pomdp.states),
        "actions: " + " ".join(pomdp.actions),
        "observations: " + " ".join(pomdp.observations),
        f"init: {pomdp.states[pomdp.initial]}",
        f"goal: {pomdp.states[pomdp.goal]}",
    ]
    for s, z in enumerate(pomdp.observation_of):
        lines.append(f"obs: {pomdp.states[s]} {pomdp.observations[z]}")
    for s, row in enumerate(pomdp.transitions):
        for a, dist in enumerate(row):
            for succ, prob in dist:
                lines.append(
                    f"trans: {pomdp.states[s]} {pomdp.actions[a]} "
                    + f"{pomdp.states[succ]} {prob!r}"
                )
    return "\n".join(lines) + "\n"
