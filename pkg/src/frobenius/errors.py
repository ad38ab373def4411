"""Exception hierarchy shared by every module in the package."""


class FrobeniusError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(FrobeniusError, ValueError):
    pass


class SingularMatrix(FrobeniusError, ArithmeticError):
    pass


class NoAmbient(FrobeniusError):
    """The algebra has no matrix realization inside sl_n."""


class NotClosed(FrobeniusError, ValueError):
    """A proposed span is not closed under the bracket."""


class NotFrobenius(FrobeniusError):
    """The form B_F is degenerate where a Frobenius functional was required."""


class NotFrobeniusOrUnlucky(NotFrobenius):
    """Sampling found no Frobenius functional within the attempt budget."""


class NotATree(FrobeniusError, ValueError):
    pass


class EdgeNotInSet(FrobeniusError, KeyError):
    pass


class HypothesisViolated(FrobeniusError, ValueError):
    pass


class LimitExceeded(FrobeniusError, ValueError):
    pass


class ParseError(FrobeniusError, ValueError):
    pass


class ValidationError(FrobeniusError, ValueError):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
