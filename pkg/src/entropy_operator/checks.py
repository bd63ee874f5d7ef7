"""Numerical identity checks, collected into a machine-readable report."""

from dataclasses import dataclass, asdict
import math

import numpy as np

from . import bipartite, field, qubit, spectral, wigner
from .bipartite import ModelParams


@dataclass(frozen=True)
class Check:
    name: str
    beta: complex
    chit: float
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.residual <= self.tolerance)

    def as_dict(self):
        d = asdict(self)
        d["beta_re"], d["beta_im"] = self.beta.real, self.beta.imag
        del d["beta"]
        d["passed"] = self.passed
        return d


def _maxabs(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def joint_purity(j):
    """Tr(rho^2) of the joint state from its blocks."""
    return sum(np.trace(j.blocks[a][b] @ j.blocks[b][a]) for a in range(2) for b in range(2)).real


def model_checks(p: ModelParams, wigner_points=(0j, 0.3 + 0.4j, -1.0 + 0.5j)):
    """All identity checks at one parameter point, as a list of Check."""
    tol = p.tol
    out = []

    def add(name, residual, tolerance):
        out.append(Check(name, p.beta, p.chit, float(residual), tolerance))

    j = bipartite.build_joint(p)
    rho_a = bipartite.reduce_atom(j)
    rho_b = bipartite.reduce_field(j)

    ov = field.analytic_overlaps(p)
    add("overlap_analytic_vs_numeric", abs(ov.cs - np.vdot(j.c, j.s)), 1e-10)
    add("joint_purity", abs(joint_purity(j) - 1.0), 1e-10)

    powers_a = [np.eye(2), rho_a]
    powers_b = [None, rho_b]
    for n in range(2, 8):
        powers_a.append(powers_a[-1] @ rho_a)
        powers_b.append(powers_b[-1] @ rho_b)
    add("trace_identity", max(abs(np.trace(powers_b[n]) - np.trace(powers_a[n])) for n in range(2, 8)), 1e-9)
    add("field_power_from_atom_trace",
        max(_maxabs(powers_b[n + 1], bipartite.weighted_atom_trace(j, powers_a[n])) for n in range(1, 5)), 1e-9)
    add("atom_power_from_field_trace",
        max(_maxabs(powers_a[n + 1], bipartite.weighted_field_trace(j, powers_b[n])) for n in range(1, 5)), 1e-9)
    sd = qubit.spectral_data(rho_a, tol)
    add("field_power_recursion",
        max(_maxabs(powers_b[k + 1], qubit.g_coeff(sd, k) * powers_b[2] - sd.det * qubit.g_coeff(sd, k - 1) * rho_b)
            for k in range(1, 7)), 1e-9)
    add("cayley_hamilton_power",
        max(_maxabs(qubit.atom_power(rho_a, n, tol), powers_a[n]) for n in range(1, 8)), 1e-10)

    s_vn = spectral.von_neumann_entropy(rho_a)
    s_a_mean = qubit.mean_atom_entropy(rho_a, tol)
    s_b_mean = field.mean_field_entropy(j, tol)
    add("entropy_equality", abs(s_a_mean - s_b_mean), 1e-9)
    add("entropy_vs_eigen_oracle", abs(s_a_mean - s_vn), 1e-9)
    add("field_entropy_vs_eigen_oracle", abs(s_b_mean - spectral.von_neumann_entropy(rho_b)), 1e-9)

    coeffs = qubit.entropy_coeffs(sd, tol)
    if coeffs.is_pure:
        add("pure_point_entropy", abs(s_a_mean) + abs(s_b_mean), 1e-9)
        return out

    s_a = qubit.atom_entropy_operator(rho_a, tol)
    add("atom_entropy_vs_matrix_log", _maxabs(s_a, spectral.matrix_neg_log(rho_a)), 1e-10)
    mean = np.trace(rho_a @ s_a).real
    moment = math.sqrt(max(np.trace(rho_a @ s_a @ s_a).real - mean**2, 0.0))
    add("fluctuation_vs_moment", abs(qubit.atom_entropy_fluctuation(rho_a, tol) - moment), 1e-10)
    add("inverse_spin_flip_vs_purity",
        _maxabs(qubit.spin_flip(rho_a), qubit.purity_operator(rho_a)) / sd.det, 1e-9)

    routes = {
        "polynomial": field.field_entropy_from_polynomial(j, tol),
        "trace": field.field_entropy_from_trace(j, tol),
        "expansion": field.field_entropy_from_expansion(j, tol),
        "spin_flip": field.field_entropy_from_spin_flip(j, tol),
        "dyads": field.field_entropy_from_dyads(p),
    }
    names = list(routes)
    add("field_entropy_route_equality",
        max(_maxabs(routes[a], routes[b]) for i, a in enumerate(names) for b in names[i + 1:]), 1e-9)
    s_b = routes["polynomial"]
    add("field_entropy_vs_matrix_log", _maxabs(s_b, spectral.matrix_neg_log(rho_b)), 1e-9)
    # the kernel of rho_B is the orthogonal complement of span{c, s}
    basis, _ = np.linalg.qr(np.column_stack([j.c, j.s]))
    complement = np.eye(j.dim) - basis @ basis.conj().T
    add("field_entropy_kernel", np.linalg.norm(s_b @ complement, 2), 1e-8)

    if p.beta.imag == 0.0:
        add("wigner_series_vs_closed",
            max(abs(wigner.wigner_series(s_b, a, p) - wigner.wigner_closed_form(a, p)) for a in wigner_points), 1e-8)
    return out


def fluctuation_sign_note(p: ModelParams):
    """Signed closed-form fluctuation against the non-negative standard deviation."""
    rho_a = bipartite.reduce_atom(bipartite.build_joint(p))
    return {
        "beta_re": p.beta.real,
        "beta_im": p.beta.imag,
        "chit": p.chit,
        "signed_closed_form": qubit.atom_entropy_fluctuation(rho_a, p.tol, signed=True),
        "standard_deviation": qubit.atom_entropy_fluctuation(rho_a, p.tol),
        "note": "ln((1-2 eps)/(1+2 eps)) sqrt(det) is <= 0; the reported fluctuation is its absolute value",
    }


def verify(params):
    """Run ``model_checks`` for each parameter set; returns (checks, notes)."""
    checks, notes = [], []
    for p in params:
        checks.extend(model_checks(p))
        notes.append(fluctuation_sign_note(p))
    return checks, notes
