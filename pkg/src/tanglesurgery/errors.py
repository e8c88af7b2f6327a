"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ArithmeticError, ValueError):
    """An operation was applied outside the set where it is defined."""


class ConstraintError(ValueError):
    """Family parameters violate ``m * p == 0``."""


class DegeneratePointError(DomainError):
    """A closed-form fraction has a vanishing denominator at this parameter point."""

    def __init__(self, params, what: str):
        self.params = params
        self.what = what
        super().__init__(f"degenerate parameter point {params}: {what}")
