import re
from typing import Dict, FrozenSet, List, Optional, Text, Tuple

from pydantic import ValidationError

from pomsat.exceptions import DimensionMismatch, EmptySupport, StrategySyntaxError
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy
from pomsat.utils.common import validation_error_message

HEADER_PATTERN = re.compile(r"^(mu|m0|deterministic|mode):\s*(\S+)$")
SECTION_PATTERN = re.compile(r"^(actions|updates):$")
ENTRY_PATTERN = re.compile(r"^([^:]+):(.*)$")

MODES = ("memory", "observation")


def _names(support: FrozenSet[int], names: Tuple[Text, ...]) -> Text:
    return " ".join(names[i] for i in sorted(support))


def dump_strategy(strategy: FiniteMemoryStrategy, p: Pomdp) -> Text:
    """Render a strategy in the structured text format, using names of ``p``."""

    mode = "observation" if strategy.is_observation_based else "memory"
    lines = [
        f"mu: {strategy.mu}",
        f"m0: {strategy.m0}",
        f"deterministic: {str(strategy.deterministic).lower()}",
        f"mode: {mode}",
        "actions:",
    ]
    if strategy.observation_support is not None:
        for z in range(p.num_observations):
            support = strategy.observation_support[z]
            lines.append(f"  {p.observations[z]}: {_names(support, p.actions)}")
    else:
        for m, support in enumerate(strategy.action_support):
            lines.append(f"  {m}: {_names(support, p.actions)}")
    lines.append("updates:")
    for m, by_obs in enumerate(strategy.update_support):
        for z, by_act in enumerate(by_obs):
            for a, support in enumerate(by_act):
                targets = " ".join(str(m2) for m2 in sorted(support))
                lines.append(
                    f"  {m} {p.observations[z]} {p.actions[a]}: {targets}"
                )
    return "\n".join(lines) + "\n"


def _index(table: Dict[Text, int], name: Text, what: Text, lineno: int) -> int:
    if name not in table:
        raise StrategySyntaxError(f"line {lineno}: unknown {what} '{name}'")
    return table[name]


def _memory(token: Text, lineno: int) -> int:
    if not token.isdigit():
        raise StrategySyntaxError(f"line {lineno}: invalid memory state '{token}'")
    return int(token)


def load_strategy(text: Text, p: Pomdp) -> FiniteMemoryStrategy:
    """Parse the output of ``dump_strategy`` back against the model ``p``."""

    header: Dict[Text, Text] = {}
    section: Optional[Text] = None
    actions: Dict[Text, FrozenSet[int]] = {}
    updates: Dict[Tuple[int, int, int], FrozenSet[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if section is None and (match := HEADER_PATTERN.match(line)):
            header[match.group(1)] = match.group(2)
            continue
        if match := SECTION_PATTERN.match(line):
            section = match.group(1)
            continue
        match = ENTRY_PATTERN.match(line)
        if match is None or section is None:
            raise StrategySyntaxError(f"line {lineno}: unexpected '{line}'")
        left, right = match.group(1).split(), match.group(2).split()
        if not right:
            raise EmptySupport(f"line {lineno}: empty support")
        if section == "actions":
            if len(left) != 1:
                raise StrategySyntaxError(f"line {lineno}: malformed action entry")
            actions[left[0]] = frozenset(
                _index(p.action_index, name, "action", lineno) for name in right
            )
        else:
            if len(left) != 3:
                raise StrategySyntaxError(f"line {lineno}: malformed update entry")
            key = (
                _memory(left[0], lineno),
                _index(p.observation_index, left[1], "observation", lineno),
                _index(p.action_index, left[2], "action", lineno),
            )
            updates[key] = frozenset(_memory(token, lineno) for token in right)

    for field in ("mu", "m0", "deterministic", "mode"):
        if field not in header:
            raise StrategySyntaxError(f"Missing '{field}' header")
    if header["mode"] not in MODES:
        raise StrategySyntaxError(f"Unknown mode '{header['mode']}'")
    if not header["mu"].isdigit() or not header["m0"].isdigit():
        raise StrategySyntaxError("'mu' and 'm0' must be non-negative integers")
    mu, m0 = int(header["mu"]), int(header["m0"])
    deterministic = header["deterministic"].lower() == "true"

    update_support: List = []
    if updates or header["mode"] == "memory":
        for m, _, _ in updates:
            if m >= mu:
                raise DimensionMismatch(f"Memory state {m} out of range for mu={mu}")
        for m in range(mu):
            by_obs = []
            for z in range(p.num_observations):
                by_act = []
                for a in range(p.num_actions):
                    if (m, z, a) not in updates:
                        raise DimensionMismatch(
                            f"Missing update for ({m}, {p.observations[z]}, "
                            + f"{p.actions[a]})"
                        )
                    by_act.append(updates[(m, z, a)])
                by_obs.append(tuple(by_act))
            update_support.append(tuple(by_obs))

    try:
        if header["mode"] == "observation":
            return FiniteMemoryStrategy(
                mu=mu,
                m0=m0,
                num_observations=p.num_observations,
                num_actions=p.num_actions,
                observation_support={
                    _index(p.observation_index, name, "observation", 0): support
                    for name, support in actions.items()
                },
                update_support=tuple(update_support),
                deterministic=deterministic,
            )
        by_memory = {_memory(key, 0): support for key, support in actions.items()}
        if sorted(by_memory) != list(range(mu)):
            raise DimensionMismatch(
                f"Action supports given for memory states {sorted(by_memory)}, "
                + f"expected 0..{mu - 1}"
            )
        return FiniteMemoryStrategy(
            mu=mu,
            m0=m0,
            num_observations=p.num_observations,
            num_actions=p.num_actions,
            action_support=tuple(by_memory[m] for m in range(mu)),
            update_support=tuple(update_support),
            deterministic=deterministic,
        )
    except ValidationError as e:
        raise DimensionMismatch(validation_error_message(e)) from e
