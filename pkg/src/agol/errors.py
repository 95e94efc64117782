"""Exception hierarchy shared by the package."""


class AgolError(Exception):
    """Base class for every error raised by :mod:`agol`."""


class FieldMismatch(AgolError, ArithmeticError):
    """Two irrational operands live in different quadratic fields."""


class DivisionByZero(AgolError, ZeroDivisionError):
    pass


class InvalidCF(AgolError, ValueError):
    """A continued fraction with a nonpositive partial quotient."""


class NotInIn(AgolError, ValueError):
    """A parameter word violates one of the membership clauses of I_n."""


class BadIndex(AgolError, ValueError):
    pass


class EncodingError(AgolError):
    """The stored track encoding is inconsistent or unsolvable."""


class NonPositiveWeight(AgolError, ValueError):
    pass


class DegenerateSplit(AgolError):
    """A maximal-weight large branch would need a central split."""


class NoCycleFound(AgolError):
    pass
