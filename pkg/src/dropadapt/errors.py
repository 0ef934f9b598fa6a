"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A scenario or module configuration violates a documented precondition."""


class ShapeMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NonFiniteError(FloatingPointError):
    """A computation produced inf or NaN (overflow / divergence)."""


class ContractViolationError(RuntimeError):
    """An internal invariant was broken upstream (corrupted state, stale cache)."""
