"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration value: unknown tag, bad spectrum, violated bound."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class NumericError(RuntimeError):
    """A numerical routine failed to produce a usable result."""
