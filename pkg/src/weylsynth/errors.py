"""Exception types raised by weylsynth."""


class WeylError(Exception):
    """Base class for all library errors."""


class NonUnitaryInputError(WeylError, ValueError):
    """A matrix expected to be unitary is not, within tolerance."""


class MalformedCircuitError(WeylError, ValueError):
    pass


class DomainError(WeylError, ValueError):
    pass


class InfeasibleError(WeylError, ValueError):
    """A trigonometric system has no real solution beyond tolerance."""


class UnsupportedBaseError(WeylError, ValueError):
    pass


class OutOfRegionError(WeylError, ValueError):
    """Target coordinates violate a construction's preconditions.

    ``violated`` lists the human-readable inequalities that failed.
    """

    def __init__(self, message, violated=()):
        super().__init__(message)
        self.violated = list(violated)


class IndexOutOfRangeError(WeylError, IndexError):
    pass
