"""Exception hierarchy shared by every module.

The CLI maps these onto exit statuses (2 for input/precondition errors,
3 for resource caps, 1 for invariant violations).
"""


class ToricError(Exception):
    """Base class for all package errors."""


class InputError(ToricError, ValueError):
    """Malformed or inconsistent input (bad labels, graph mismatch, ...)."""


class PreconditionError(ToricError, ValueError):
    """An operation was called on an argument outside its domain."""


class ResourceError(ToricError, RuntimeError):
    """A configurable enumeration cap was exceeded."""


class InvariantViolation(ToricError, AssertionError):
    """An internal consistency check failed; this signals a bug."""
