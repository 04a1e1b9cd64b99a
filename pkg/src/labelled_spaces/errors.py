"""Exception hierarchy shared by all modules.

The split mirrors the CLI exit codes: input/parse problems exit with 2,
semantic refusals (violated preconditions, unsupported families) with 1.
"""


class LabelledSpaceError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LabelledSpaceError):
    """Malformed input: unknown vertices or letters, bad syntax, duplicate ids."""


class ParseError(InputError):
    """Syntax error in a graph file or a command-line literal."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class DomainError(LabelledSpaceError):
    """A well-formed value outside an operation's domain (e.g. a word that is
    not a labelled path, a non-idempotent where an idempotent is required)."""


class UnsupportedFamilyError(DomainError):
    """Raised when an operation needs a family property that does not hold,
    e.g. closure under relative complements for transition-graph machinery."""


class CoverError(DomainError):
    """Rejected cover certificate; carries the uncovered residue."""

    def __init__(self, message, residue=frozenset()):
        super().__init__(message)
        self.residue = residue
