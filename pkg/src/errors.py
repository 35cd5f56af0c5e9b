"""
Error types
Every library failure is a SkewDualError; the CLI maps them to exit code 1
"""


class SkewDualError(ValueError):
    """Base class for all library errors"""


# gf
class CompositeCharacteristic(SkewDualError):
    pass


class ReducibleModulus(SkewDualError):
    pass


class FieldTooLarge(SkewDualError):
    pass


class DivisionByZero(SkewDualError, ZeroDivisionError):
    pass


class NonDivisorDegree(SkewDualError):
    pass


class NotABasis(SkewDualError):
    pass


class NormNotOne(SkewDualError):
    pass


# skewpoly
class MixedRings(SkewDualError):
    pass


class ZeroInput(SkewDualError):
    pass


class WrongConvention(SkewDualError):
    pass


# framework
class AnnihilatorCertificateInvalid(SkewDualError):
    pass


class NotDirectSummand(SkewDualError):
    pass


# constacyclic
class OrderMismatch(SkewDualError):
    pass


class NotFixedUnit(SkewDualError):
    pass


class NotALeftDivisor(SkewDualError):
    pass


class NotMonic(SkewDualError):
    pass


# skewrs
class NotNormal(SkewDualError):
    pass


class BadDelta(SkewDualError):
    pass


class CodeTooLarge(SkewDualError):
    pass


class ZeroCode(SkewDualError):
    pass


# convolutional
class SingularU(SkewDualError):
    pass


class BasisNotSelfDualNormal(SkewDualError):
    pass


class BadCertificate(SkewDualError):
    pass
