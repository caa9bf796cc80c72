"""Exception types shared across the package.

The command-line front end maps each family to an exit code, so the
hierarchy is kept flat and explicit.
"""


class KnotError(Exception):
    """Base class for all errors raised by knotsurf."""


class NotationError(KnotError):
    """A text input could not be parsed.

    ``kind`` is one of ``Syntax``, ``ArcIncidence``, ``OrientationConflict``
    or ``OutOfRange``; ``position`` is a character offset into the input.
    """

    KINDS = ("Syntax", "ArcIncidence", "OrientationConflict", "OutOfRange")

    def __init__(self, kind, position, message):
        if kind not in self.KINDS:
            raise ValueError("unknown notation error kind %r" % (kind,))
        self.kind = kind
        self.position = position
        self.message = message
        super().__init__("%s at %d: %s" % (kind, position, message))

    def as_dict(self):
        return {"kind": self.kind, "position": self.position, "message": self.message}


class ValidationError(KnotError):
    """A diagram failed validation (e.g. it is not planar)."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class DomainError(KnotError):
    """An operation was called outside its mathematical domain."""


class MoveError(DomainError):
    """A Reidemeister move was requested at a site where its pattern is absent."""
