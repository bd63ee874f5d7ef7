"""Hermitian eigendecomposition by cyclic Jacobi rotations.

This is the independent reference used to check the closed-form entropy
results, so it deliberately shares nothing with ``qubit`` or ``field``.
"""

from dataclasses import dataclass
import math

import numpy as np

KERNEL_CUTOFF = 1e-10


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray   # ascending
    eigenvectors: np.ndarray  # columns, orthonormal

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _rotate(a, v, p, q):
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r
    theta = 0.5 * math.atan2(2.0 * r, (a[q, q] - a[p, p]).real)
    c, s = math.cos(theta), math.sin(theta)
    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] acting on the (p, q) plane
    g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ g


def eig_hermitian(m, herm_tol=1e-10, rtol=1e-12, max_sweeps=100):
    """Full spectrum of a Hermitian matrix.

    Sweeps until the off-diagonal Frobenius norm is below ``rtol * ||m||_F``.
    Raises ValueError for non-Hermitian input.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > herm_tol:
        raise ValueError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    target = rtol * scale
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            break
        # entries this small cannot move the off-norm above target
        skip = target / n
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip:
                    _rotate(a, v, p, q)
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return Spectrum(w[order], v[:, order])


def matrix_function(m, func, herm_tol=1e-10):
    """``func`` applied to a Hermitian matrix through its spectrum."""
    sp = eig_hermitian(m, herm_tol=herm_tol)
    vals = np.array([func(x) for x in sp.eigenvalues], dtype=complex)
    return (sp.eigenvectors * vals) @ sp.eigenvectors.conj().T


def matrix_neg_log(m, kernel_policy="zero", eq_tol=1e-9, kernel_cutoff=KERNEL_CUTOFF):
    """-ln(m) for a positive semidefinite Hermitian matrix.

    Eigenvalues at or below ``kernel_cutoff`` form the kernel: they map to 0
    under ``kernel_policy="zero"`` and raise under ``"reject"``.
    """
    if kernel_policy not in ("zero", "reject"):
        raise ValueError(f"unknown kernel_policy {kernel_policy!r}")
    sp = eig_hermitian(m)
    lam = sp.eigenvalues
    if lam.size and lam[0] < -eq_tol:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {lam[0]:.3e})")
    support = lam > kernel_cutoff
    if kernel_policy == "reject" and not np.all(support):
        raise ValueError("matrix has a nontrivial kernel")
    vals = np.zeros_like(lam)
    vals[support] = -np.log(lam[support])
    return (sp.eigenvectors * vals) @ sp.eigenvectors.conj().T


def von_neumann_entropy(m, kernel_cutoff=KERNEL_CUTOFF):
    """-sum(lam ln lam) over the eigenvalues of a density matrix."""
    lam = eig_hermitian(m).eigenvalues
    lam = lam[lam > kernel_cutoff]
    return float(-np.sum(lam * np.log(lam)))
