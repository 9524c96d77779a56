"""Exception types shared across the package."""


class TwwColError(Exception):
    """Base class for all errors raised by twwcol."""


class ResourceLimitError(TwwColError):
    """A search exceeded its node budget.

    ``best_known`` carries the best upper bound found before giving up, when
    the search had one.
    """

    def __init__(self, message, best_known=None):
        super().__init__(message)
        self.best_known = best_known


class InvalidSequenceError(TwwColError):
    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class DisconnectedGraphError(TwwColError):
    pass


class NotACographError(TwwColError):
    pass


class DomainError(TwwColError, ValueError):
    """A bound formula was evaluated outside the range where it is stated."""


class SigningError(TwwColError, ValueError):
    pass


class SizeGuardError(TwwColError):
    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class FormatError(TwwColError, ValueError):
    """Malformed graph, witness or order file."""
