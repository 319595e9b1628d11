"""Exceptions shared by the library and the command line."""


class ParseError(ValueError):
    """Malformed configuration input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonGenericError(ValueError):
    """A configuration fails genericity; ``witness`` is an offending index subset."""

    def __init__(self, witness, message=None):
        self.witness = tuple(witness)
        super().__init__(message or f"configuration is not generic: points {list(self.witness)} are affinely dependent")


class BudgetError(RuntimeError):
    """A size cap or retry budget was exceeded."""
