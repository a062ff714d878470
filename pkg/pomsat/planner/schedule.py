from typing import List, Optional, Sequence


def complete_horizon(num_states: int, mu: int) -> int:
    """The horizon from which an UNSAT answer rules out every strategy of size mu."""

    return num_states * mu


def k_schedule(
    num_states: int, mu: int, explicit: Optional[Sequence[int]] = None
) -> List[int]:
    """Horizons to try for one memory size.

    Doubles from 2 while below ``|S| * mu`` and finishes exactly at
    ``|S| * mu``. An explicit schedule is used as given.
    """

    if explicit is not None:
        return list(explicit)
    bound = complete_horizon(num_states, mu)
    schedule: List[int] = []
    k = 2
    while k < bound:
        schedule.append(k)
        k *= 2
    schedule.append(bound)
    return schedule
