"""Exception types raised across skeinlab."""


class SkeinlabError(Exception):
    pass


class NotDivisible(SkeinlabError, ArithmeticError):
    """A Laurent polynomial is not an exact multiple of the requested divisor."""


class DivisionNotExact(SkeinlabError, ArithmeticError):
    """A quotient of skein scalars does not lie in the coefficient ring."""


class BoundExceeded(SkeinlabError, ValueError):
    pass


class SizeMismatch(SkeinlabError, ValueError):
    pass


class ComponentMismatch(SkeinlabError, ValueError):
    pass


class ResourceLimit(SkeinlabError, RuntimeError):
    """The evaluator exceeded its crossing or node budget."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})
