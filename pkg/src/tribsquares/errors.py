"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range where a quantity is defined."""


class NotAFactorError(ValueError):
    """A word could not be located in the Tribonacci word.

    ``horizon`` is the prefix length that was searched, or ``None`` when the
    word is structurally impossible (for instance, a letter outside ``abc``).
    """

    def __init__(self, message, horizon=None):
        super().__init__(message)
        self.horizon = horizon


class ResourceError(RuntimeError):
    """A request would exceed a configured size cap or host memory."""
