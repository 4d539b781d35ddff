"""Exception hierarchy shared by every layer of the kernel."""


class UHGError(Exception):
    """Base class for all errors raised by this package."""


# -- field -----------------------------------------------------------------

class InvalidModulus(UHGError, ValueError):
    """A prime-field modulus that is not an odd prime."""


class CharacteristicTwo(InvalidModulus):
    pass


class MixedContexts(UHGError, TypeError):
    """Arithmetic between elements of different fields."""


class DivisionByZero(UHGError, ZeroDivisionError):
    pass


class ParseError(UHGError, ValueError):
    """Malformed textual literal."""


# -- geometric degeneracy ----------------------------------------------------

class DegenerateError(UHGError):
    """A construction is undefined for the given (special) input.

    Theorem trials treat every subclass as a rejected configuration.
    """


class IdenticalArguments(DegenerateError):
    pass


class NotCollinear(DegenerateError):
    pass


class DegenerateQuadruple(DegenerateError):
    pass


class DegenerateConfiguration(DegenerateError):
    pass


class DualCouple(DegenerateError):
    pass


class DualTriangle(DegenerateError):
    pass


class NilNullSide(DegenerateError):
    pass


class NullMirror(DegenerateError):
    pass


class DegenerateSide(DegenerateError):
    pass


class DegenerateVertex(DegenerateError):
    pass


class NullArgument(DegenerateError):
    pass


class CollinearPoints(DegenerateError):
    pass


class MidpointsAbsent(DegenerateError):
    pass


class MidlinesAbsent(MidpointsAbsent):
    pass


class DegenerateCouple(DegenerateError):
    pass


class NoIntersection(DegenerateError):
    pass


class ExteriorLine(DegenerateError):
    pass


class NoNullPointsOnJoin(DegenerateError):
    pass


class DegenerateAux(DegenerateError):
    pass


class DegenerateDouble(DegenerateError):
    pass


class ZeroSpread(DegenerateError):
    pass


class NullCenter(DegenerateError):
    pass


class HypothesisViolated(DegenerateError):
    pass


class DegenerateDenominator(DegenerateError):
    pass


class Inconsistent(DegenerateError):
    pass


class GeneratorExhausted(UHGError):
    pass


class UnknownTheorem(UHGError, KeyError):
    pass
