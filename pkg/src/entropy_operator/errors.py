"""Exception types shared across the package."""


class TruncationError(ValueError):
    """The truncated Fock basis is too small for the requested amplitude."""


class NearPureError(ArithmeticError):
    """The reduced state is (numerically) pure, so -ln(rho) is unbounded."""


class NotDensityMatrixError(ValueError):
    """Input is not Hermitian with unit trace within tolerance."""
