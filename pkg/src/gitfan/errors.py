"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
error classes to distinct process exit codes without a lookup table.
"""


class GitFanError(Exception):
    exit_code = 1


class ParseError(GitFanError):
    """Malformed problem file or command line value."""

    exit_code = 2


class ValidationError(GitFanError):
    """Input data or a computed object violates a structural invariant."""

    exit_code = 3


class FanValidationError(ValidationError):
    """A collection of cones fails one of the fan axioms.

    ``kind`` is one of ``NOT_FACE_CLOSED``, ``BAD_INTERSECTION`` or
    ``SUPPORT_MISMATCH``; ``witness`` holds the offending cones or point.
    """

    def __init__(self, kind, message, witness=None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.witness = witness


class DataInconsistencyError(GitFanError):
    """A query is inconsistent with the problem data (or the data with itself)."""

    exit_code = 4

    def __init__(self, kind, message):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class ZeroConeError(ValueError):
    pass
