"""Exception taxonomy, aligned with the CLI exit codes.

ValidationError / PreconditionError map to exit 1 (bad user data),
TheoremViolationError to exit 2 (an internal bug: a proved identity failed),
SchemaError / UnknownCatalogEntry to exit 3 (I/O and schema problems).
"""

__all__ = [
    "ShapeError",
    "ValidationError",
    "PreconditionError",
    "WellDefinednessError",
    "TheoremViolationError",
    "SchemaError",
    "UnknownCatalogEntry",
]


class ShapeError(ValueError):
    """Vector/matrix dimensions do not match."""


class ValidationError(ValueError):
    """A Lie algebra, almost complex structure or homogeneous pair is invalid."""


class PreconditionError(ValueError):
    """An operation's documented precondition does not hold for the given input."""


class WellDefinednessError(PreconditionError):
    """An induced quotient map is not well defined; the message names the violated inclusion."""


class TheoremViolationError(RuntimeError):
    """A mathematically impossible state was reached; always an implementation bug."""


class SchemaError(ValueError):
    """Malformed input file or JSON document."""


class UnknownCatalogEntry(KeyError):
    """Catalog lookup failed; the message lists the available names."""
