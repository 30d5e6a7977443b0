"""Exception types shared across the package."""


class BetaTauError(Exception):
    """Base class for all package errors."""


class DomainError(BetaTauError, ValueError):
    """An input is outside the mathematical domain of an operation."""


class ResourceLimitError(BetaTauError, RuntimeError):
    """A configured size/depth cap would be exceeded."""


class NoRootError(BetaTauError, ArithmeticError):
    """A bracketing solve found no sign change in the search range."""


class PrecisionError(BetaTauError, ArithmeticError):
    """Requested digits or residuals are not certifiable at this precision."""
