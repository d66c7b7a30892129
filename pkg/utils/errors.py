"""Exception hierarchy shared by the library modules and the CLI."""


class BraidmodError(Exception):
    """Base class for every error raised by braidmod."""


class BraidParseError(BraidmodError, ValueError):
    pass


class StrandMismatchError(BraidmodError, ValueError):
    pass


class UnsupportedError(BraidmodError):
    """The request is outside what the implemented criteria cover."""


class DomainError(BraidmodError, ValueError):
    pass


class InvariantViolation(BraidmodError):
    """A computed value broke a known mathematical bound."""


class MonodromyError(BraidmodError):
    pass


class LoopFormatError(MonodromyError, ValueError):
    pass


class SeparabilityViolation(MonodromyError):
    pass


class RefinementExhausted(MonodromyError):
    pass


class ProjectionDegenerate(MonodromyError):
    pass


class CrossCheckFailed(MonodromyError):
    pass


class WindingAmbiguous(MonodromyError):
    pass
