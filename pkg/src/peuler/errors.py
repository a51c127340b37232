"""Exception types raised across the package."""


class PEulerError(ValueError):
    """Base class for all domain errors."""


class InvalidPermutation(PEulerError):
    pass


class CyclicRelation(PEulerError):
    pass


class InvalidLabel(PEulerError):
    pass


class SizeMismatch(PEulerError):
    pass


class InvalidSpec(PEulerError):
    pass


class UnboundVariable(PEulerError):
    pass


class NotInDAB(PEulerError):
    pass


class InvalidGrade(PEulerError):
    pass


class ZeroPolynomial(PEulerError):
    pass


class InvalidParameter(PEulerError):
    pass


class NotSymmetric(PEulerError):
    pass


class NotHomogeneous(PEulerError):
    pass


class ParseError(PEulerError):
    pass
