"""Exception types shared across the package."""


class NumradError(Exception):
    """Base class for all numrad errors."""


class NonHermitianInput(NumradError):
    """Input matrix is not Hermitian within the documented tolerance."""


class NoConvergence(NumradError):
    """Jacobi sweep cap exceeded before the off-diagonal mass vanished."""


class NotPSD(NumradError):
    """Matrix has an eigenvalue below the negative clamping band."""


class DimensionMismatch(NumradError):
    """Operands have incompatible dimensions."""


class UnknownInequality(NumradError):
    """Identifier not present in the inequality registry."""


class BadParam(NumradError):
    """Parameter outside the range an inequality is stated for."""


class NotAlphaBetaNormal(NumradError):
    """Supplied (alpha, beta) pair is not certified for this element."""


class NotSelfAdjoint(NumradError):
    """Operation requires self-adjoint inputs."""


class NotCommuting(NumradError):
    """Refined bound requires commuting inputs."""


class BadSpec(NumradError):
    """Generator spec is malformed or infeasible."""
