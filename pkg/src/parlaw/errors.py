"""Exception hierarchy shared by all modules."""


class ParlawError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(ParlawError, ValueError):
    pass


class ModeMismatch(ParlawError, TypeError):
    pass


class EmptyFamily(ParlawError, ValueError):
    pass


class InvalidRange(ParlawError, ValueError):
    pass


class LabelOutOfRange(ParlawError, IndexError):
    pass


class DegenerateGenerators(ParlawError, ValueError):
    pass


class ExhaustedRetries(ParlawError, RuntimeError):
    pass


class InputError(ParlawError, ValueError):
    """Malformed or unreadable input document."""
