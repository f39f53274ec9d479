"""Exception types shared by the bchdim modules."""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class ClosedFormInapplicable(DomainError):
    """The closed-form formulas do not cover the requested parameters.

    Callers that want a total answer catch this and fall back to the coset
    oracle.
    """


class DeferredToPriorWork(ClosedFormInapplicable):
    """Bose distance exactly at the upper end of the closed-form range."""


class DeskScaleExceeded(DomainError):
    """The brute-force oracle would need more memory than it is allowed."""
