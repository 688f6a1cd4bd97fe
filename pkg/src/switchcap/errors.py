"""Exception types shared across the package."""


class SwitchCapError(Exception):
    """Base class for every error raised by switchcap."""


class NotHermitianError(SwitchCapError):
    """A matrix expected to be Hermitian is not, within tolerance."""


class NoConvergenceError(SwitchCapError):
    """The iterative eigensolver exhausted its sweep budget."""


class InvalidSpectrumError(SwitchCapError, ValueError):
    """Values do not form a valid density-matrix spectrum."""


class InvalidStateError(SwitchCapError, ValueError):
    """A density matrix or amplitude vector violates its invariants."""


class DimensionMismatchError(SwitchCapError, ValueError):
    """Operands have incompatible dimensions."""


class DimensionOutOfRangeError(SwitchCapError, ValueError):
    """Requested dimension is outside the supported range."""


class SizeGuardError(SwitchCapError):
    """A brute-force computation would exceed the operation budget."""


class DomainError(SwitchCapError, ValueError):
    """Scalar argument lies outside the domain of a closed-form expression."""
