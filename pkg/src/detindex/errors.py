"""Engine and pipeline error types, and the computation budget guard."""

from __future__ import annotations

import time


class RingMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when a computation runs past its configured wall-clock budget."""


class NonIsolated(RuntimeError):
    """The critical locus off the singular stratum is positive-dimensional."""


class NonGeneric(RuntimeError):
    """Supplied genericity data is degenerate; freshly seeded data works."""

    def __init__(self, message, seeds=()):
        super().__init__(message)
        self.seeds = tuple(seeds)


class NotSmoothable(RuntimeError):
    """A smoothable-only quantity was requested on a non-smoothable germ."""


class IrrationalSingularPoints(RuntimeError):
    """The critical locus meets the singular stratum outside the listed points."""


class Deadline:
    """Wall-clock budget; check() raises BudgetExceeded once it is spent."""

    __slots__ = ("_limit",)

    def __init__(self, seconds: float | None):
        self._limit = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self._limit is not None and time.monotonic() > self._limit:
            raise BudgetExceeded("computation budget exceeded")


NO_DEADLINE = Deadline(None)
