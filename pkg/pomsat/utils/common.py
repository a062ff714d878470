import time
from contextlib import contextmanager
from typing import Generator, List, Sequence, Text

from pydantic import ValidationError


def validation_error_message(e: ValidationError) -> Text:
    """Join the messages of a pydantic ``ValidationError`` without the noise."""

    return "; ".join(
        str(err.get("ctx", {}).get("error", err["msg"])) for err in e.errors()
    )


def parse_int_list(text: Text) -> List[int]:
    """Parse ``"2,4,8"`` into ``[2, 4, 8]``."""

    values = [int(token) for token in text.replace(" ", "").split(",") if token]
    if not values:
        raise ValueError(f"Expected a comma separated list of integers, got '{text}'")
    return values


def is_strictly_increasing(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


class Stopwatch:
    def __init__(self):
        self.elapsed_ms: float = 0.0


@contextmanager
def stopwatch() -> Generator[Stopwatch, None, None]:
    watch = Stopwatch()
    started = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed_ms = (time.perf_counter() - started) * 1000.0
