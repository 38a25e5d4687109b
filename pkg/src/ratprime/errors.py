"""Exception hierarchy shared across the package."""


class RatPrimeError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(RatPrimeError):
    """Operands live over different coefficient fields."""


class PreconditionError(RatPrimeError):
    """An operation was called outside its documented domain."""


class DegenerateDerivativeError(PreconditionError):
    """The derivative vanishes identically (perfect p-th power in char p).

    This is a reportable analysis outcome, not an internal failure; callers
    that aggregate results catch it and record the degeneracy.
    """
