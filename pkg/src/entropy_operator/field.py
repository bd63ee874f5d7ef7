"""Entropy operator of the field mode.

Since rho_B^{n+1} = Tr_A{rho rho_A^n}, a qubit function written as
a 1 + b rho_A transfers to the field as a rho_B + b rho_B^2. The field
entropy operator is therefore a quadratic polynomial in rho_B, and it
vanishes on the kernel of rho_B rather than diverging there.
"""

from dataclasses import dataclass
import cmath

import numpy as np

from . import bipartite, fock, qubit
from .bipartite import JointState, ModelParams
from .errors import NearPureError


@dataclass(frozen=True)
class OverlapSet:
    cc: float
    ss: float
    cs: complex
    sc: complex


def analytic_overlaps(p: ModelParams) -> OverlapSet:
    """<c|c> = <s|s> = 1/2 and <c|s> = exp(-|beta|^2 (1 - e^{2i chi t})) / 2."""
    cs = 0.5 * cmath.exp(-abs(p.beta) ** 2 * (1.0 - cmath.exp(2j * p.chit)))
    return OverlapSet(cc=0.5, ss=0.5, cs=cs, sc=cs.conjugate())


def analytic_atom_state(p: ModelParams) -> np.ndarray:
    """rho_A built from the closed-form overlaps, with no Fock truncation."""
    ov = analytic_overlaps(p)
    return np.array([[ov.cc, ov.sc], [ov.cs, ov.ss]])


def _coefficients(rho_a, tol):
    sd = qubit.spectral_data(rho_a, tol)
    co = qubit.entropy_coeffs(sd, tol)
    if co.is_pure:
        raise NearPureError(f"reduced states are pure (eps = {sd.eps!r}); no entropy operator")
    return sd, co


def field_entropy_from_polynomial(j: JointState, tol=fock.DEFAULT_TOL) -> np.ndarray:
    """S_B = (F1 + F2/det) rho_B - (F2/det) rho_B^2."""
    sd, co = _coefficients(bipartite.reduce_atom(j), tol)
    k = co.f2 / sd.det
    return (co.f1 + k) * bipartite.reduce_field(j) - k * bipartite.field_power(j, 2)


def field_entropy_from_trace(j: JointState, tol=fock.DEFAULT_TOL) -> np.ndarray:
    """S_B = Tr_A{rho S_A rho_A^{-1}}."""
    rho_a = bipartite.reduce_atom(j)
    _coefficients(rho_a, tol)
    q = qubit.atom_entropy_operator(rho_a, tol) @ qubit.atom_inverse(rho_a, tol)
    return bipartite.weighted_atom_trace(j, q)


def field_entropy_from_expansion(j: JointState, tol=fock.DEFAULT_TOL) -> np.ndarray:
    """S_B = Tr_A{rho (F1 + (F2/det) [1 - rho_A])}."""
    rho_a = bipartite.reduce_atom(j)
    sd, co = _coefficients(rho_a, tol)
    q = co.f1 * np.eye(2) + (co.f2 / sd.det) * qubit.purity_operator(rho_a)
    return bipartite.weighted_atom_trace(j, q)


def field_entropy_from_spin_flip(j: JointState, tol=fock.DEFAULT_TOL) -> np.ndarray:
    """S_B = Tr_A{rho S_A sigma_y rho_A* sigma_y} / det."""
    rho_a = bipartite.reduce_atom(j)
    sd, _ = _coefficients(rho_a, tol)
    q = qubit.atom_entropy_operator(rho_a, tol) @ qubit.spin_flip(rho_a) / sd.det
    return bipartite.weighted_atom_trace(j, q)


def field_entropy_from_dyads(p: ModelParams) -> np.ndarray:
    """S_B assembled from |c>, |s> and the closed-form overlaps:

    (F1 + F2/(2 det)) (|c><c| + |s><s|) - (F2/det) (<s|c> |s><c| + <c|s> |c><s|)
    """
    ov = analytic_overlaps(p)
    sd, co = _coefficients(analytic_atom_state(p), p.tol)
    j = bipartite.build_joint(p)
    k = co.f2 / sd.det
    diag = (co.f1 + 0.5 * k) * (j.blocks[0][0] + j.blocks[1][1])
    cross = ov.sc * j.blocks[1][0] + ov.cs * j.blocks[0][1]
    return diag - k * cross


def field_entropy(p: ModelParams) -> np.ndarray:
    """The field entropy operator at ``p`` (polynomial route)."""
    return field_entropy_from_polynomial(bipartite.build_joint(p), p.tol)


def mean_field_entropy(j: JointState, tol=fock.DEFAULT_TOL) -> float:
    """Tr(rho_B S_B); zero when the reduced states are pure."""
    try:
        s_b = field_entropy_from_polynomial(j, tol)
    except NearPureError:
        return 0.0
    return float(np.trace(bipartite.reduce_field(j) @ s_b).real)
