"""Exception hierarchy shared by every chordq module."""


class ChordqError(Exception):
    """Base class for all library errors."""


class Graph6ParseError(ChordqError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapacityError(ChordqError, ValueError):
    """Input exceeds a documented size ceiling."""


class InvalidEditError(ChordqError, ValueError):
    """Edge addition/removal whose precondition does not hold."""


class PreconditionError(ChordqError, ValueError):
    """An operation was called outside its documented domain."""


class RotationPreconditionError(PreconditionError):
    def __init__(self, which: str, message: str):
        super().__init__(f"{which}: {message}")
        self.which = which


class FamilyParameterError(ChordqError, ValueError):
    """Family parameters violate the family's constraints."""


class SolverError(ChordqError, ArithmeticError):
    """Iterative solver did not converge within its cap."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual
