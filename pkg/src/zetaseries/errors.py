"""Exception types shared by every module."""


class ZetaSeriesError(Exception):
    pass


class DomainError(ZetaSeriesError, ValueError):
    """Argument outside the region where a representation is valid."""


class NonPositiveBase(DomainError):
    pass


class PoleAtOne(DomainError):
    pass


class PoleSet(DomainError):
    """s hits one of the excluded integers of a relation."""


class EtaZeroDivisor(DomainError, ZeroDivisionError):
    """1 - 2^(1-s) vanishes at working precision."""


class UnsupportedRegion(DomainError):
    pass


class ConstraintViolated(DomainError):
    pass


class DegenerateLeading(DomainError):
    pass


class NotConverged(ZetaSeriesError, ArithmeticError):
    """Raised by value-returning wrappers when the term budget ran out.

    The partial EvalResult is kept on ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
