"""Wigner function of the field entropy operator.

Two routes: the displaced-parity series sum_n (-1)^n <alpha,n|S|alpha,n>
for any field operator, and the closed form that holds for the dispersive
model with real beta. By default no 2/pi prefactor is applied, so a pure
state has W = 1 at its own centre; ``convention="standard"`` multiplies by
2/pi.
"""

from dataclasses import dataclass
import math

import numpy as np

from . import fock
from .bipartite import ModelParams
from .errors import NearPureError, TruncationError
from .field import analytic_atom_state, field_entropy
from . import qubit

CONVENTIONS = {"paper": 1.0, "standard": 2.0 / math.pi}


def _prefactor(convention):
    try:
        return CONVENTIONS[convention]
    except KeyError:
        raise ValueError(f"convention must be one of {sorted(CONVENTIONS)}") from None


def series_length(beta, alpha):
    """Number of parity-series terms needed at phase-space point ``alpha``."""
    return fock.default_dim(abs(beta) + abs(alpha))


def wigner_series(op, alpha, p: ModelParams, convention="paper", imag_tol=1e-10) -> float:
    """sum_n (-1)^n <alpha,n| op |alpha,n> for a Hermitian field operator.

    The retained components of each D(alpha)|n> are exact, so the only
    truncation is the number of terms; the tail term must fall below
    ``p.tol.series_tol``.
    """
    op = np.asarray(op)
    dim = op.shape[0]
    if np.max(np.abs(op - op.conj().T)) > p.tol.herm_tol * max(1.0, np.max(np.abs(op))):
        raise ValueError("operator is not Hermitian")
    count = series_length(p.beta, alpha)
    vecs = fock.displaced_number_states(alpha, count, dim)
    terms = np.einsum("nj,jk,nk->n", vecs.conj(), op, vecs)
    tail = np.max(np.abs(terms[-3:]))
    if tail > p.tol.series_tol:
        raise TruncationError(f"parity series not converged at alpha={alpha}: tail term {tail:.3e}")
    signs = np.where(np.arange(count) % 2 == 0, 1.0, -1.0)
    total = np.sum(signs * terms)
    if abs(total.imag) > imag_tol * max(1.0, abs(total.real)):
        raise ArithmeticError(f"Wigner series has imaginary part {total.imag:.3e}")
    return float(total.real) * _prefactor(convention)


def wigner_closed_form(alpha, p: ModelParams, convention="paper") -> float:
    """Closed-form Wigner function of the field entropy operator (real beta only)."""
    if p.beta.imag != 0.0:
        raise ValueError("the closed form requires a real coherent amplitude beta")
    beta = p.beta.real
    ax, ay = complex(alpha).real, complex(alpha).imag
    sd = qubit.spectral_data(analytic_atom_state(p), p.tol)
    co = qubit.entropy_coeffs(sd, p.tol)
    if co.is_pure:
        raise NearPureError("reduced states are pure; the field entropy operator is undefined")
    ct = p.chit
    envelope = math.exp(-2 * beta**2 - 2 * (ax * ax + ay * ay) + 4 * beta * ax * math.cos(ct))
    half_k = co.f2 / (2 * sd.det)
    value = envelope * (co.f1 + half_k) * math.cosh(4 * beta * ay * math.sin(ct)) - envelope * half_k * math.cos(
        2 * beta * (beta * math.sin(2 * ct) - 2 * ax * math.sin(ct))
    )
    return value * _prefactor(convention)


@dataclass(frozen=True)
class WignerGrid:
    """Values indexed ``[i, j]`` for point ``x_points[i] + 1j * y_points[j]``."""

    x_points: np.ndarray
    y_points: np.ndarray
    series: np.ndarray | None
    closed: np.ndarray | None
    params: ModelParams
    convention: str = "paper"

    @property
    def values(self):
        return self.series if self.series is not None else self.closed

    @property
    def max_abs_diff(self):
        if self.series is None or self.closed is None:
            return None
        return float(np.max(np.abs(self.series - self.closed)))


def wigner_grid(p: ModelParams, xs, ys, source="both", convention="paper", op=None) -> WignerGrid:
    """Evaluate one or both routes on the grid ``xs`` x ``ys``.

    ``op`` defaults to the field entropy operator at ``p``.
    """
    if source not in ("series", "closed", "both"):
        raise ValueError("source must be 'series', 'closed' or 'both'")
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size == 0 or ys.size == 0:
        raise ValueError("grid must be nonempty")
    _prefactor(convention)
    series = closed = None
    if source in ("series", "both"):
        if op is None:
            op = field_entropy(p)
        series = np.array([[wigner_series(op, complex(x, y), p, convention) for y in ys] for x in xs])
    if source in ("closed", "both"):
        closed = np.array([[wigner_closed_form(complex(x, y), p, convention) for y in ys] for x in xs])
    return WignerGrid(xs, ys, series, closed, p, convention)
