"""Exception hierarchy shared by the package."""


class SuperStableError(Exception):
    """Base class for every error raised by :mod:`superstable`."""


class InputError(SuperStableError, ValueError):
    """Malformed or semantically invalid input (bad ids, descriptors, files)."""


class PreconditionError(SuperStableError, ValueError):
    """An operation was called with arguments violating its precondition."""


class InvariantError(SuperStableError, AssertionError):
    """An internal invariant failed; this always indicates a bug."""


class ParseError(InputError):
    """Syntax or semantic error in a text document, with a position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
