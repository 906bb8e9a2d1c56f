"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid Dynkin data, unparseable input, or an unsupported configuration."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class ModelIntegrityError(RuntimeError):
    """An internal consistency guard failed; signals a bug, not bad input."""


class NotInImageError(ValueError):
    """A path does not lie in the image of the weight-lattice embedding."""
