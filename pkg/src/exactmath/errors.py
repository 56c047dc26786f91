"""Exception hierarchy for the exact-arithmetic kernel.

Every domain failure raises a subclass of :class:`KernelError`, so callers
(and the CLI) can distinguish "your input is outside the operation's domain"
from genuine bugs.  Parse failures raise :class:`ParseError`, which carries
the offending position.
"""


class KernelError(Exception):
    """Base class for all domain errors raised by the kernel."""


class ParseError(KernelError):
    """Malformed literal or formula text."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


# -- arithmetic ------------------------------------------------------------

class DivisionByZero(KernelError):
    pass


class NonPositiveDivisor(KernelError):
    pass


class ZeroDivisorQuery(KernelError):
    pass


class BothZero(KernelError):
    pass


class ZeroArgument(KernelError):
    pass


class OutOfDomain(KernelError):
    pass


class BadBase(KernelError):
    pass


class BadDegree(KernelError):
    pass


class NegativeValue(KernelError):
    pass


class UnknownKind(KernelError):
    pass


# -- logic -----------------------------------------------------------------

class UnboundAtom(KernelError):
    pass


class TooManyAtoms(KernelError):
    pass


# -- sets and relations ----------------------------------------------------

class NotASubset(KernelError):
    pass


class TooLarge(KernelError):
    pass


class InconsistentCounts(KernelError):
    pass


class MixedAtoms(KernelError):
    pass


class DomainMismatch(KernelError):
    pass


class NotEndorelation(KernelError):
    pass


class NotBijective(KernelError):
    pass


# -- finite algebra --------------------------------------------------------

class CarrierMismatch(KernelError):
    pass


# -- matrices and systems --------------------------------------------------

class ShapeMismatch(KernelError):
    pass


class NotSquare(KernelError):
    pass


class BadMethod(KernelError):
    pass


class IndexOutOfRange(KernelError):
    pass


class Singular(KernelError):
    pass


class SingularSystem(KernelError):
    pass


# -- geometry --------------------------------------------------------------

class ZeroVector(KernelError):
    pass


class DependentBasis(KernelError):
    pass


class NotInSpan(KernelError):
    pass


class Degenerate(KernelError):
    pass


class CollinearPoints(KernelError):
    pass


class ZeroCoefficient(KernelError):
    pass


class CoincidentPoints(KernelError):
    pass


class ParallelPlanes(KernelError):
    pass


# -- ratios, percents, mixtures --------------------------------------------

class NoSolution(KernelError):
    pass


class BadWeights(KernelError):
    pass


class WrongArity(KernelError):
    pass


class NonPositive(KernelError):
    pass


class AnnihilatingDelta(KernelError):
    pass


class Unsolvable(KernelError):
    pass


class UnbalancedSides(KernelError):
    pass


class TargetCollision(KernelError):
    pass
