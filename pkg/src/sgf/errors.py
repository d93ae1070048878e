"""Exception hierarchy. Every domain failure derives from SemigroupError."""


class SemigroupError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class EmptyInput(SemigroupError, ValueError):
    pass


class InvalidGenerators(SemigroupError, ValueError):
    pass


class SemigroupOverflow(SemigroupError, OverflowError):
    """An intermediate value left the signed 64-bit range."""


class NotNumerical(SemigroupError, ValueError):
    """The generators have gcd > 1 where a numerical semigroup is required."""


class MemoryBudgetExceeded(SemigroupError, MemoryError):
    pass


class BoundTooSmall(SemigroupError, ValueError):
    pass


class InvalidPair(SemigroupError, ValueError):
    """Not a pair 1 < a1 < a2 with gcd(a1, a2) = 1."""


class NotAGap(SemigroupError, ValueError):
    pass


class NotMember(SemigroupError, ValueError):
    pass


class NotMinimal(SemigroupError, ValueError):
    pass


class HypothesisFailed(SemigroupError, ValueError):
    pass


class BadFamilyParams(SemigroupError, ValueError):
    pass
