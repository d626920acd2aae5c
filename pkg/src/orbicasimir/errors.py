"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where a function is defined or supported."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach its tolerance within the allowed effort."""


class UnsupportedVariantError(NotImplementedError):
    """A declared but unimplemented variant was requested (e.g. minimal propagation)."""
