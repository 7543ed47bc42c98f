"""Exception types shared across the package."""


class CodingError(Exception):
    """Base class for errors raised by cssdiag."""


class ContainmentError(CodingError):
    """A required subcode relation (sub ⊆ super) does not hold."""


class EnumerationCapError(CodingError):
    """An operation would enumerate more codewords than the configured cap."""


class GateDomainError(CodingError):
    """A diagonal entry was requested outside the gate's declared domain."""


class StandardFormError(CodingError):
    """Stabilizer generators are dependent or fail to commute."""


class NotPreservedError(CodingError):
    """The gate does not preserve the codespace, so no logical gate is induced."""
