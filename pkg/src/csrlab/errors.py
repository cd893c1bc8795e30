"""Exception types shared across the library."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class ResourceBudgetError(RuntimeError):
    """An enumeration or search would exceed its configured budget."""


class ConfigError(ValueError):
    """An experiment configuration is malformed or contains unknown keys."""
