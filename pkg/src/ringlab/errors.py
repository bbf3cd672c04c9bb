"""Exception types shared across the workbench."""


class RinglabError(Exception):
    """Base class for all workbench errors."""


class InfiniteRing(RinglabError):
    """Raised when an exhaustive operation is requested on an infinite ring."""


class UnsupportedDescriptor(RinglabError):
    """Malformed ring parameters (modulus < 2, matrix size 0, ...)."""


class DimensionMismatch(RinglabError):
    """Incompatible matrix shapes."""


class BudgetExceeded(RinglabError):
    """A search exceeded its tuple budget or a hard size limit."""


class NotComaximal(RinglabError):
    """aR + bR != R where comaximality was required."""


class NoWitness(RinglabError):
    """An existence search came up empty (hypothesis violation upstream)."""


class HypothesisFailed(RinglabError):
    """A stated precondition of a constructive procedure does not hold."""


class NotUnit(RinglabError):
    """An element required to be invertible is not."""


class ZeroInput(RinglabError):
    """Nonzero input required."""


class NoDecomposition(RinglabError):
    """No sum-of-two-units decomposition exists."""


class NoFactorization(RinglabError):
    """Required one-sided factorization does not exist."""


class ConstructionFailed(RinglabError):
    """A multi-step witness construction failed; carries the step index."""

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"construction failed at step {step}")


class NotInS(RinglabError):
    """Skew polynomial whose constant coefficient is not in Z[sqrt(-7)]."""


class NotHermite(RinglabError):
    """No (d, 0) form reachable; carries the explored orbit size."""

    def __init__(self, orbit_size: int, message: str = ""):
        self.orbit_size = orbit_size
        super().__init__(message or f"no diagonal form in orbit of size {orbit_size}")


class NotReducible(RinglabError):
    """Orbit exhausted without a chain-condition diagonal form."""

    def __init__(self, orbit_size: int, message: str = ""):
        self.orbit_size = orbit_size
        super().__init__(message or f"orbit of size {orbit_size} holds no valid diagonal")


class ParseError(RinglabError):
    """Syntax error in the ring DSL or an element literal."""

    def __init__(self, offset: int, expected: str, text: str = ""):
        self.offset = offset
        self.expected = expected
        super().__init__(f"parse error at offset {offset}: expected {expected}")


class SemanticError(RinglabError):
    """Grammatically valid input with impossible parameters (e.g. Zn(1))."""
