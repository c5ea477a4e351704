"""Shared exception types and the cooperative deadline token."""

import time


class PolyoError(Exception):
    """Base class for all library errors."""

    code = "internal"


class ParseError(PolyoError):
    """Malformed cell encoding or invalid cell data."""

    code = "parse_error"


class PreconditionError(PolyoError):
    """A documented precondition was violated (e.g. non-convex input for the convex ring)."""

    code = "precondition_failed"


class RingMismatchError(PolyoError):
    """Operands belong to different rings."""

    code = "ring_mismatch"


class ResourceLimitExceeded(PolyoError):
    """Deadline or S-pair budget exhausted; no partial result is returned."""

    code = "timeout"


class Deadline:
    """Cooperative cancellation token checked inside long-running loops.

    ``Deadline(seconds)`` expires that many seconds from creation;
    ``Deadline(None)`` never expires.
    """

    __slots__ = ("expires_at",)

    def __init__(self, seconds=None):
        self.expires_at = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.expires_at is not None and time.monotonic() > self.expires_at:
            raise ResourceLimitExceeded("computation exceeded its time budget")

    def expired(self):
        return self.expires_at is not None and time.monotonic() > self.expires_at
