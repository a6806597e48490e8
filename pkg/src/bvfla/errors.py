class BvflaError(Exception):
    """Base class for workbench errors."""


class TableFormatError(BvflaError, ValueError):
    """A Cayley-table file could not be parsed; carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DegreeError(BvflaError, ValueError):
    """A membership degree is malformed or out of its role's range."""


class OrderMismatch(BvflaError, ValueError):
    """Operands live on carriers of different sizes."""


class PreconditionError(BvflaError):
    """A law or theorem hypothesis does not hold for the given instance."""


class TargetSyntaxError(BvflaError, ValueError):
    """A search target is not a boolean formula over classification flags."""
