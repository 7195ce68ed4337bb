"""Exception types shared across the package."""

from __future__ import annotations

import os

DEFAULT_GUARD = 10**7


class ChornError(Exception):
    """Base class for every error raised by chorn."""


class GraphError(ChornError, ValueError):
    """Malformed graph input: unknown label, loop edge, bad family size."""


class TruncationError(ChornError, ValueError):
    """A coefficient was requested above the truncation bound of a series."""


class GuardExceeded(ChornError, RuntimeError):
    """An enumeration would exceed the configured size guard."""

    def __init__(self, what: str, estimate: int, guard: int):
        super().__init__(f"{what}: estimated {estimate} steps exceeds guard {guard}")
        self.estimate = estimate
        self.guard = guard


class InconsistentSamples(ChornError, ValueError):
    """Over-determined interpolation data do not lie on one polynomial."""


def enumeration_guard(override: int | None = None) -> int:
    """Current guard, honouring the ``CHORN_GUARD`` environment variable."""
    if override is not None:
        return override
    env = os.environ.get("CHORN_GUARD")
    if env:
        return int(env)
    return DEFAULT_GUARD


def check_guard(what: str, estimate: int, guard: int | None = None) -> None:
    limit = enumeration_guard(guard)
    if estimate > limit:
        raise GuardExceeded(what, estimate, limit)
