"""Exception hierarchy shared by every cusplab module."""


class CusplabError(Exception):
    """Base class for all library errors."""


# exact core
class NonSquare(CusplabError, ValueError):
    pass


class RankDeficient(CusplabError, ValueError):
    pass


class Pole(CusplabError, ZeroDivisionError):
    """A rational function was specialised at a zero of its denominator."""


class BadPrime(CusplabError, ValueError):
    pass


# lattices and actions
class Degenerate(CusplabError, ValueError):
    pass


class ZeroScale(CusplabError, ValueError):
    pass


class NotPositiveDefinite(CusplabError, ValueError):
    pass


class NotInCommutant(CusplabError, ValueError):
    pass


class NotInG(CusplabError, ValueError):
    pass


class PreconditionFailed(CusplabError, ValueError):
    pass


class ZeroVector(CusplabError, ValueError):
    pass


class NotRepresentable(CusplabError, ValueError):
    pass


# periods
class NotDecomposable(CusplabError, ValueError):
    pass


class ZeroForm(CusplabError, ValueError):
    pass


class NotInDomain(CusplabError, ValueError):
    pass


# polynomials
class PolySyntaxError(CusplabError, SyntaxError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(CusplabError, KeyError):
    def __str__(self):
        return f"unknown variable {self.args[0]!r}"


class RegistryMismatch(CusplabError, ValueError):
    pass


class NotLinearInPair(CusplabError, ValueError):
    pass


# surfaces
class CenterOfProjection(CusplabError, ValueError):
    pass


class IndeterminatePoint(CusplabError, ValueError):
    pass


class BadParameter(CusplabError, ValueError):
    pass


class CollidingExpectedPoints(CusplabError, ValueError):
    pass


class DegenerateParameter(CusplabError, ValueError):
    pass


class NotSQH(CusplabError, ValueError):
    pass
