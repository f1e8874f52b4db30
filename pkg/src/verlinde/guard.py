"""Size guard for tensor-power blowup, overridable via VERLINDE_SIZE_GUARD."""

from __future__ import annotations

import os

DEFAULT_LIMIT = 10_000


class SizeGuardError(Exception):
    """Raised instead of materializing a presenting space that is too large."""

    def __init__(self, dimension: int, limit: int):
        self.dimension = dimension
        self.limit = limit
        super().__init__(
            f"presenting space of dimension {dimension} exceeds the size guard {limit}"
        )


def size_guard_limit() -> int:
    raw = os.environ.get("VERLINDE_SIZE_GUARD")
    if raw is None:
        return DEFAULT_LIMIT
    return int(raw)


def check_size(dimension: int) -> None:
    limit = size_guard_limit()
    if dimension > limit:
        raise SizeGuardError(dimension, limit)
