"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input."""


class ParseError(InputError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A Groebner basis computation ran past its resource budget."""


class NonMonomialMinor(ArithmeticError):
    """A Jacobian minor of a monomial curve did not reduce to a single term."""
