"""Exception hierarchy shared by all splintbr modules."""


class SplintError(Exception):
    """Base class for all splintbr errors."""


class RankMismatch(SplintError):
    """Operands live on weight lattices of different ranks."""


class UnsupportedLabel(SplintError):
    """Root-system label outside the built-in catalog."""


class ClosureOverflow(SplintError):
    """Weyl-group closure exceeded the safety bound."""


class NotDominant(SplintError):
    """Weight lies outside the closed dominant chamber."""


class NotIntegral(SplintError):
    """Vector is not a point of the target weight lattice."""


class NonIntegerResult(SplintError):
    """An exact computation produced a non-integer where an integer is forced."""


class ZeroDenominator(SplintError):
    """Multiplicity recursion hit a vanishing denominator."""


class NondominantLeadingTerm(SplintError):
    """Character decomposition found a leading weight outside the dominant cone."""


class NegativeMultiplicity(SplintError):
    """Character decomposition produced a negative multiplicity."""


class UnsupportedCase(SplintError):
    """Splint case tag outside the built-in catalog."""


class InvalidPartition(SplintError):
    """Sequence is not a weakly decreasing nonnegative partition."""


class InvalidLabel(SplintError):
    """Highest-weight label violates its constraints."""


class LayerOutOfRange(SplintError):
    """Hexagon layer index outside the valid range."""


class UnsupportedPattern(SplintError):
    """No closed-form rule is available for this weight pattern."""


class NotACharacter(SplintError):
    """Formal sum is not a virtual character of the target system."""
