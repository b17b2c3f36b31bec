"""Exception hierarchy shared by all posetblock modules."""


class PosetBlockError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PosetBlockError):
    """An argument is outside the domain of the operation (bad label, bad radius, ...)."""


class InvalidPosetError(PosetBlockError):
    """The supplied cover relation does not describe a partial order."""


class InvalidWeightError(PosetBlockError):
    """A coordinate weight table violates the weight axioms."""


class PreconditionError(PosetBlockError):
    """A structural precondition (chain poset, uniform block sizes, ...) does not hold."""


class UnsupportedAlphabetError(PosetBlockError):
    """The operation needs a prime modulus but got a composite one."""


class CapacityError(PosetBlockError):
    """An enumeration would exceed its configured resource cap."""


class InstanceError(PosetBlockError):
    """An instance document is syntactically or semantically invalid."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column
