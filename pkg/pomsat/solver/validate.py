from typing import Iterable, Optional, Sequence

from pomsat.exceptions import ModelValidationError


def first_falsified(
    clauses: Iterable[Sequence[int]], model: Sequence[bool]
) -> Optional[int]:
    """Index of the first clause the model falsifies, ``None`` if all hold."""

    for i, clause in enumerate(clauses):
        if not any(model[abs(lit) - 1] == (lit > 0) for lit in clause):
            return i
    return None


def validate_model(clauses: Iterable[Sequence[int]], model: Sequence[bool]) -> bool:
    return first_falsified(clauses, model) is None


def check_model(clauses: Sequence[Sequence[int]], model: Sequence[bool]) -> None:
    i = first_falsified(clauses, model)
    if i is not None:
        raise ModelValidationError(f"Model falsifies clause {i}: {list(clauses[i])}")
