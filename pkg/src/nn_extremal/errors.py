class NNExtremalError(ValueError):
    """Base class for input validation failures."""


class DegenerateSetError(NNExtremalError):
    pass


class NotDistinctError(NNExtremalError):
    pass


class ContainmentError(NNExtremalError):
    pass


class PreconditionError(NNExtremalError):
    pass


class BudgetExceededError(NNExtremalError):
    pass


class BoundViolation(AssertionError):
    """An observed sum exceeded 2a^2 + 2b^2 beyond tolerance."""
