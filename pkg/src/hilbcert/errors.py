"""Exception hierarchy shared by every module."""


class HilbCertError(Exception):
    """Base class for all errors raised by hilbcert."""


class DomainError(HilbCertError, ValueError):
    """Input lies outside the domain where a formula is valid."""


class ParityError(DomainError):
    """A half-integral quantity was requested where an integer is required."""


class PreconditionError(DomainError):
    pass


class OutOfRegion(DomainError):
    """(d, g) is in neither region A nor region B."""


class ComplexityGuard(DomainError):
    """Refuse an exhaustive search that would be too large."""


class NoSolution(HilbCertError):
    pass


class NotFound(HilbCertError):
    pass


class DegenerateInput(HilbCertError, ValueError):
    pass


class InternalInvariant(HilbCertError, AssertionError):
    """An identity that must hold by construction failed.

    This always signals a bug (or a gap in the construction being checked)
    and is never swallowed by callers.
    """
