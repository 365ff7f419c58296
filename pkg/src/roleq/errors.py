"""Exception types shared across the package."""


class RoleqError(Exception):
    """Base class for all package errors."""


class FormatError(RoleqError):
    """A record is structurally malformed (e.g. a mandatory slot is missing)."""


class VocabularyError(RoleqError):
    """A token falls outside one of the closed slot vocabularies."""


class GrammarError(RoleqError):
    """An aux/verb combination has no reading in the chain grammar."""


class ParseError(RoleqError):
    """Surface text cannot be parsed into the slot grammar."""


class AlignmentError(RoleqError):
    """Question and argument annotations disagree about the predicate."""


class DataError(RoleqError):
    """A corpus file contains an invalid record.

    Carries the file path and 1-based line number so CLI error messages can
    point at the offending record.
    """

    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
        self.message = message


class BackendError(RoleqError):
    """The external model backend failed (timeout, crash, bad output)."""


class ProtocolError(BackendError):
    """The backend violated the wire protocol (bad JSON, id mismatch)."""
