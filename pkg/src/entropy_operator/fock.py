"""Truncated Fock-space primitives.

Vectors are 1-d complex numpy arrays indexed by photon number, operators are
dense ``(dim, dim)`` complex arrays. Nothing here is cached or mutated.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.special import gammainc

from .errors import TruncationError


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used throughout the package.

    tail_tol     -- largest Fock tail mass accepted when truncating a state
    herm_tol     -- max |M - M^H| for an operator to count as Hermitian
    eq_tol       -- tolerance for density-matrix and identity checks
    pure_cutoff  -- 1/2 - eps below this means the qubit state is pure
    series_tol   -- largest admissible tail term of the Wigner parity series
    """

    tail_tol: float = 1e-12
    herm_tol: float = 1e-10
    eq_tol: float = 1e-9
    pure_cutoff: float = 1e-9
    series_tol: float = 1e-12

    def __post_init__(self):
        for name in ("tail_tol", "herm_tol", "eq_tol", "pure_cutoff", "series_tol"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie in (0, 1), got {value!r}")


DEFAULT_TOL = Tolerances()


def default_dim(amplitude):
    """Truncation for coherent amplitudes up to ``|amplitude|``.

    Mean photon number plus eight standard deviations plus a fixed margin of
    20 levels; the Poisson tail beyond that is far below 1e-12.
    """
    r = abs(amplitude)
    return int(math.ceil(r * r + 8 * r + 20))


def coherent_tail_mass(beta, dim):
    """Probability that a coherent state of amplitude ``beta`` has ``n >= dim``."""
    mu = abs(beta) ** 2
    if mu == 0.0:
        return 0.0
    # P(N >= dim) for N ~ Poisson(mu) is the regularised lower gamma P(dim, mu)
    return float(gammainc(dim, mu))


def coherent_state(beta, dim, tail_tol=DEFAULT_TOL.tail_tol):
    """Amplitudes ``exp(-|b|^2/2) b^k / sqrt(k!)`` for ``k < dim``.

    Raises TruncationError when the discarded tail mass exceeds ``tail_tol``.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    beta = complex(beta)
    tail = coherent_tail_mass(beta, dim)
    if tail > tail_tol:
        raise TruncationError(
            f"coherent state |{beta}> loses tail mass {tail:.3e} at dim={dim} "
            f"(tail_tol={tail_tol:.1e}); use dim >= {default_dim(beta)}"
        )
    amps = np.empty(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(beta) ** 2)
    for k in range(1, dim):
        amps[k] = amps[k - 1] * beta / math.sqrt(k)
    return amps


def basis_state(n, dim):
    v = np.zeros(dim, dtype=complex)
    v[n] = 1.0
    return v


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def inner(a, b):
    """<a|b>, conjugate-linear in the first argument."""
    a = np.asarray(a)
    b = np.asarray(b)
    _check_same_dim(a, b)
    return complex(np.vdot(a, b))


def op_from_dyad(u, v):
    """The outer product ``|u><v|``."""
    u = np.asarray(u)
    v = np.asarray(v)
    _check_same_dim(u, v)
    return np.outer(u, v.conj())


def displaced_number_states(alpha, count, dim):
    """Rows ``k`` hold D(alpha)|k> for ``k < count``, truncated to ``dim``.

    Uses ``D(a)|k> = (a^dag - conj(a)) D(a)|k-1> / sqrt(k)`` seeded by the
    coherent state. Component ``m`` of the result depends only on components
    ``m-1`` and ``m`` of the previous vector, so the truncation never feeds
    back into the retained entries.
    """
    alpha = complex(alpha)
    out = np.empty((count, dim), dtype=complex)
    v = np.empty(dim, dtype=complex)
    v[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for m in range(1, dim):
        v[m] = v[m - 1] * alpha / math.sqrt(m)
    sqrt_m = np.sqrt(np.arange(dim, dtype=float))
    ca = alpha.conjugate()
    if count:
        out[0] = v
    for k in range(1, count):
        nxt = -ca * v
        nxt[1:] += sqrt_m[1:] * v[:-1]
        v = nxt / math.sqrt(k)
        out[k] = v
    return out


def displaced_number_state(alpha, n, dim, tail_tol=DEFAULT_TOL.tail_tol):
    """D(alpha)|n> in the truncated basis.

    Raises TruncationError if the norm deficit exceeds ``tail_tol``.
    """
    if not 0 <= n < dim:
        raise ValueError(f"need 0 <= n < dim, got n={n}, dim={dim}")
    v = displaced_number_states(alpha, n + 1, dim)[n]
    deficit = 1.0 - float(np.vdot(v, v).real)
    if deficit > tail_tol:
        raise TruncationError(
            f"D({complex(alpha)})|{n}> has norm deficit {deficit:.3e} at dim={dim}"
        )
    return v
