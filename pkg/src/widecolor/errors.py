"""Exception types shared across the package."""


class BudgetExhausted(RuntimeError):
    """A search ran out of its node budget before deciding the question.

    ``lower``/``upper`` carry whatever bounds were established before giving up
    (either may be None).
    """

    def __init__(self, message, lower=None, upper=None, nodes=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class CapExceeded(ValueError):
    """An instance is larger than a configured size cap."""


class ConstructionError(AssertionError):
    """An explicit construction produced something it must never produce."""


class ParseError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
