"""Shared exception types."""


class ParameterError(ValueError):
    """Arguments violate a documented precondition."""


class EmptyIntervalError(ParameterError):
    """Interval endpoints are not comparable in the componentwise order."""


class ShapeError(ParameterError):
    """Matrix does not match the required banded shape."""


class DecompositionError(ArithmeticError):
    """Unpivoted triangular factorization hit a vanishing leading minor.

    ``index`` is the 1-based size of the offending leading principal minor.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"leading principal minor {index} is zero")


class EvaluationError(ArithmeticError):
    """Expression evaluation required the inverse of a zero value."""


class BudgetError(RuntimeError):
    """Requested enumeration exceeds the configured size guard."""


class ConfigError(ValueError):
    """Sweep configuration is invalid."""


class ParseError(ValueError):
    """Malformed text input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
