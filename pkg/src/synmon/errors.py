"""Exception types and size caps shared across the package."""
from __future__ import annotations

import os


class SynmonError(Exception):
    """Base class for computation errors raised by this package."""


class CapExceeded(SynmonError):
    """A construction grew past its configured size limit."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class AlphabetMismatch(SynmonError):
    pass


class MorphismKindError(SynmonError):
    pass


class NotCommutativeError(SynmonError):
    pass


class RegexSyntaxError(SynmonError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


DEFAULT_STATE_CAP = 10_000
DEFAULT_MONOID_CAP = 5_000
DEFAULT_DOWNSET_BASE_CAP = 16
DEFAULT_FAMILY_CAP = 100_000
DEFAULT_TERM_CAP = 10_000


def state_cap() -> int:
    """State cap for determinization; ``SYNMON_STATE_CAP`` overrides it."""
    value = os.environ.get("SYNMON_STATE_CAP")
    return int(value) if value else DEFAULT_STATE_CAP
