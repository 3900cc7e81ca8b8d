"""Exception types shared across the package."""


class CoxError(Exception):
    """Base class for errors raised by coxspecial."""


class DomainError(CoxError, ValueError):
    """An argument outside the admissible domain (bad type string, m < 3, ...)."""


class InvalidOperandError(CoxError, ArithmeticError):
    """Division by zero, mixed fields, dimension mismatch."""


class SizeExceededError(CoxError):
    """A brute-force oracle was asked to enumerate a group above its limit."""

    def __init__(self, what: str, limit: int, size: int | None = None):
        self.limit = limit
        self.size = size
        msg = f"{what}: group order exceeds oracle limit {limit}"
        if size is not None:
            msg += f" (|W| = {size})"
        super().__init__(msg)


class ContractError(CoxError, AssertionError):
    """An internal consistency assertion failed (a bug or a mathematical counterexample)."""
