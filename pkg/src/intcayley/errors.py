"""Exception types shared across the package."""


class CayleyError(Exception):
    """Base class for all package errors."""


class ParameterMismatchError(CayleyError, ValueError):
    """Two objects built for different ``n`` were combined."""


class ContractError(CayleyError, ValueError):
    """An input violates an operation's precondition (e.g. non-symmetric S)."""


class NotApplicableError(CayleyError):
    """A criterion does not apply to the shape of the given connection set.

    Distinct from a negative verdict: the question cannot be answered by
    this method at all.
    """


class ContextMismatchError(CayleyError, ValueError):
    """Cyclotomic values from different conductors were combined."""
