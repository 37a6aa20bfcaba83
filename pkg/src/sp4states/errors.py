"""Exception types raised by the engine."""


class Sp4Error(Exception):
    """Base class for all engine errors."""


class NonInvertibleScalar(Sp4Error, ZeroDivisionError):
    pass


class NotSingleTerm(Sp4Error, ValueError):
    pass


class NonTermination(Sp4Error, RuntimeError):
    pass


class NotHomogeneous(Sp4Error, ValueError):
    pass


class NotInSpan(Sp4Error, ValueError):
    pass


class SingularBasis(Sp4Error, ValueError):
    pass


class InvalidLabel(Sp4Error, ValueError):
    pass
