"""Exception hierarchy shared by every module.

All failures raised by the library derive from :class:`LexiringError` so
callers (and the CLI) can distinguish library errors from bugs.
"""


class LexiringError(Exception):
    """Base class for all library errors."""


class ParseError(LexiringError):
    """Malformed structure grammar or element literal.

    Carries the offending text and a 0-based position when known.
    """

    def __init__(self, message, text=None, pos=None):
        if text is not None and pos is not None:
            message = f"{message} (at position {pos} in {text!r})"
        super().__init__(message)
        self.text = text
        self.pos = pos


class ShapeError(LexiringError):
    """A value does not have the shape demanded by its descriptor."""


class CapabilityError(LexiringError):
    """An operation was requested on a structure that does not support it."""


class DomainError(LexiringError):
    """Operation applied outside its mathematical domain (e.g. level of zero)."""


class NotSummableError(LexiringError):
    """A countable sum cannot be evaluated inside the given structure."""


class NotRepresentableError(LexiringError):
    """A least upper bound does not exist inside the given structure."""


class InfiniteMassError(LexiringError):
    """A probability construction produced an infinite value."""


class InconsistentSlicesError(LexiringError):
    """Slice data does not arise from any measure (ambiguous top level)."""
