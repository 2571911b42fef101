class StoreMismatch(ValueError):
    """Operands of an ADD operation come from different node stores."""


class UnknownVariable(KeyError):
    pass


class CnfParseError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CountOverflow(ArithmeticError):
    """A terminal became infinite or NaN during counting."""


class CountTimeout(RuntimeError):
    pass


class InvariantViolation(AssertionError):
    """A clustering heuristic broke the conditions that make the count exact."""


class TooManyVariables(ValueError):
    pass
