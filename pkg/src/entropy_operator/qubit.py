"""Closed-form algebra of a qubit density matrix.

Any 2x2 density matrix can be written as 1/2 + R with R traceless and
R^2 = eps^2 * 1, so every function of rho is a linear combination of rho
and the identity. The eigenvalues are lambda_pm = 1/2 +- eps and the
determinant is lambda_+ lambda_- = 1/4 - eps^2.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import NearPureError, NotDensityMatrixError
from .fock import DEFAULT_TOL, Tolerances

SIGMA_Y = np.array([[0, -1j], [1j, 0]])

# below this eps the closed form for G(n) loses digits to cancellation
_G_SERIES_EPS = 1e-3


@dataclass(frozen=True)
class AtomSpectralData:
    delta: float
    eps: float
    det: float
    lambda_plus: float
    lambda_minus: float


@dataclass(frozen=True)
class EntropyCoefficients:
    """S_A = f1 * rho_A + f2 * 1. Both are None in the near-pure regime."""

    f1: float | None
    f2: float | None
    regime: str  # "regular", "near_pure" or "near_maximal"

    @property
    def is_pure(self):
        return self.regime == "near_pure"


def check_density(rho_a, tol: Tolerances = DEFAULT_TOL):
    rho_a = np.asarray(rho_a, dtype=complex)
    if rho_a.shape != (2, 2) or not np.all(np.isfinite(rho_a)):
        raise NotDensityMatrixError("expected a finite 2x2 matrix")
    if np.max(np.abs(rho_a - rho_a.conj().T)) > tol.herm_tol:
        raise NotDensityMatrixError("qubit operator is not Hermitian")
    tr = np.trace(rho_a)
    if abs(tr - 1.0) > tol.eq_tol:
        raise NotDensityMatrixError(f"trace {tr.real:.12g} differs from 1")
    return rho_a


def spectral_data(rho_a, tol: Tolerances = DEFAULT_TOL) -> AtomSpectralData:
    rho_a = check_density(rho_a, tol)
    delta = float((rho_a[0, 0] - rho_a[1, 1]).real)
    # average the two off-diagonals so tiny Hermiticity noise cancels
    rho12 = 0.5 * (rho_a[0, 1] + rho_a[1, 0].conjugate())
    eps = math.sqrt(0.25 * delta * delta + abs(rho12) ** 2)
    if eps > 0.5 + tol.eq_tol:
        raise NotDensityMatrixError(f"eps = {eps:.12g} > 1/2: matrix is not positive")
    eps = min(eps, 0.5)
    lp, lm = 0.5 + eps, 0.5 - eps
    return AtomSpectralData(delta=delta, eps=eps, det=lp * lm, lambda_plus=lp, lambda_minus=lm)


def g_coeff(sd: AtomSpectralData, n: int) -> float:
    """G(n) = (lambda_+^n - lambda_-^n) / (2 eps); equals n / 2^(n-1) at eps = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0.0
    lp, lm = sd.lambda_plus, sd.lambda_minus
    if sd.eps < _G_SERIES_EPS:
        # same quantity as a geometric sum, since lambda_+ - lambda_- = 2 eps
        return math.fsum(lp ** (n - 1 - k) * lm ** k for k in range(n))
    return (lp ** n - lm ** n) / (2.0 * sd.eps)


def atom_power(rho_a, n: int, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """rho_A^n = G(n) rho_A - det G(n-1) 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rho_a = check_density(rho_a, tol)
    sd = spectral_data(rho_a, tol)
    return g_coeff(sd, n) * rho_a - sd.det * g_coeff(sd, n - 1) * np.eye(2)


def entropy_coeffs(sd: AtomSpectralData, tol: Tolerances = DEFAULT_TOL) -> EntropyCoefficients:
    eps = sd.eps
    if 0.5 - eps < tol.pure_cutoff:
        return EntropyCoefficients(None, None, "near_pure")
    if eps < tol.pure_cutoff:
        # ln((1-2e)/(1+2e)) / (2e) = -2 (1 + 4e^2/3 + ...)
        f1 = -2.0 * (1.0 + 4.0 * eps * eps / 3.0)
        regime = "near_maximal"
    else:
        # ln((1-2e)/(1+2e)) = -2 atanh(2e), without the cancellation
        f1 = -math.atanh(2.0 * eps) / eps
        regime = "regular"
    f2 = -0.5 * (math.log(sd.det) + f1)
    return EntropyCoefficients(f1, f2, regime)


def _coeffs_or_raise(sd, tol):
    co = entropy_coeffs(sd, tol)
    if co.is_pure:
        raise NearPureError(f"qubit state is pure to within {tol.pure_cutoff:g} (eps = {sd.eps!r})")
    return co


def atom_entropy_operator(rho_a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """S_A = -ln(rho_A) = F1 rho_A + F2 1."""
    rho_a = check_density(rho_a, tol)
    co = _coeffs_or_raise(spectral_data(rho_a, tol), tol)
    return co.f1 * rho_a + co.f2 * np.eye(2)


def mean_atom_entropy(rho_a, tol: Tolerances = DEFAULT_TOL) -> float:
    """<S_A> = F2 + F1 (1 - 2 det); zero for a pure state."""
    sd = spectral_data(rho_a, tol)
    co = entropy_coeffs(sd, tol)
    if co.is_pure:
        return 0.0
    return co.f2 + co.f1 * (1.0 - 2.0 * sd.det)


def atom_entropy_fluctuation(rho_a, tol: Tolerances = DEFAULT_TOL, signed=False) -> float:
    """Standard deviation of S_A in the state rho_A.

    Equal to |ln((1-2 eps)/(1+2 eps))| sqrt(det). With ``signed=True`` the
    logarithm keeps its (non-positive) sign.
    """
    sd = spectral_data(rho_a, tol)
    if entropy_coeffs(sd, tol).is_pure:
        return 0.0
    value = -2.0 * math.atanh(2.0 * sd.eps) * math.sqrt(sd.det)
    return value if signed else abs(value)


def spin_flip(rho_a) -> np.ndarray:
    """sigma_y rho* sigma_y."""
    return SIGMA_Y @ np.conj(rho_a) @ SIGMA_Y


def purity_operator(rho_a) -> np.ndarray:
    return np.eye(2) - np.asarray(rho_a)


def atom_inverse(rho_a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """rho_A^{-1} = (1 - rho_A) / det, cross-checked against the spin-flip form."""
    rho_a = check_density(rho_a, tol)
    sd = spectral_data(rho_a, tol)
    if sd.det <= tol.eq_tol:
        raise NearPureError(f"det = {sd.det:.3e}: qubit state is numerically singular")
    inv = purity_operator(rho_a) / sd.det
    flipped = spin_flip(rho_a) / sd.det
    if np.max(np.abs(inv - flipped)) > tol.eq_tol * np.max(np.abs(inv)):
        raise ArithmeticError("spin-flip and purity-operator inverses disagree")
    return inv
