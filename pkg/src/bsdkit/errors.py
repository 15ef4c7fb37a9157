class BsdkitError(Exception):
    """Base class for all errors raised by bsdkit."""


class BudgetExceeded(BsdkitError):
    """A size bound (prime, truncation, enumeration) is above its budget."""


class InvariantViolation(BsdkitError):
    """An internal consistency check failed, e.g. a Hasse bound breach."""


class NotOnCurve(BsdkitError, ValueError):
    pass


class PoleError(BsdkitError, ValueError):
    """Evaluation point is at (or numerically next to) a pole."""


class AmbiguousOrder(BsdkitError):
    """Baby-step/giant-step could not pin the group order; use naive counting."""


class IllConditioned(BsdkitError):
    pass
