"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` (``"DISCONNECTED"``,
``"TOO_LARGE"``, ...) so callers such as the CLI can map failures onto exit
statuses without parsing messages.
"""

from __future__ import annotations


class SurftwError(Exception):
    """Base class; ``code`` names the failure kind."""

    code = "ERROR"

    def __init__(self, code: str | None = None, message: str = "", **details):
        if code is not None:
            self.code = code
        self.details = details
        super().__init__(f"{self.code}: {message}" if message else self.code)


class TooLargeError(SurftwError):
    """An instance exceeds a configured search or oracle budget."""

    code = "TOO_LARGE"


class InternalError(SurftwError):
    """A step that must succeed by construction has failed.

    ``details["dump"]`` holds a JSON-serialisable description of the
    offending instance so that it can be replayed.
    """

    code = "INTERNAL"
