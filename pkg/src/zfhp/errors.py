"""Exception types shared across the package.

The split matters for the CLI exit codes: plain ``ValueError`` means the
caller passed bad arguments, ``DomainError`` (and subclasses) means the
arguments were well formed but outside the mathematical domain of the
operation.
"""


class DomainError(ValueError):
    """A parameter lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """Evaluation was requested at a pole."""


class ConditioningError(ArithmeticError):
    """A computation cannot be carried out to the promised accuracy."""
