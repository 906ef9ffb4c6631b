"""Exception hierarchy shared by the engine, the Proth family and the CLI."""


class SemigroupError(ValueError):
    """Base class for every error raised by this package."""


# generic engine

class EmptyInput(SemigroupError):
    pass


class InvalidGenerator(SemigroupError):
    pass


class NotCoprime(SemigroupError):
    """The generators share a factor, so the complement in N is infinite."""


class ModulusNotInSemigroup(SemigroupError):
    pass


class SemigroupIsAllNaturals(SemigroupError):
    pass


# Proth parameters

class InvalidProthParams(SemigroupError):
    pass


class NTooSmall(InvalidProthParams):
    pass


class KEven(InvalidProthParams):
    pass


class KTooLarge(InvalidProthParams):
    pass


class KIsOne(InvalidProthParams):
    pass


class ClosedFormUnavailable(SemigroupError):
    """Raised when a closed form is requested for k != 2**r + 1."""


class IndexOutOfRange(SemigroupError):
    pass


# verification

class EngineScaleExceeded(SemigroupError):
    pass


class UnsupportedFormat(SemigroupError):
    pass
