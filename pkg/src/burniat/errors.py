"""Exception hierarchy shared by all modules."""


class BurniatError(Exception):
    """Base class for every error raised by this package."""


class InputError(BurniatError, ValueError):
    """Malformed or out-of-range user input."""


class DimensionMismatchError(InputError):
    """Two divisor classes live on lattices of different rank."""


class DegenerateConfigError(BurniatError):
    """A line configuration violates the Burniat genericity requirements."""


class InvalidBurniatError(DegenerateConfigError):
    """The arrangement has a multiple point that is not of type (1,1,1)."""


class DegeneratePointError(BurniatError, ValueError):
    """A parameter point lies on a locus excluded by a verification routine."""


class DomainError(BurniatError, ValueError):
    pass


class InconclusiveError(BurniatError):
    """The effectivity semi-decision could not settle a required question."""


class UnsupportedCaseError(InputError):
    pass


class InternalConsistencyError(BurniatError, AssertionError):
    pass
