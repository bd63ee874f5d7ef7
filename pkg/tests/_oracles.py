"""Reference computations that share no code with the package."""

import math

import numpy as np
from mpmath import mp


def poisson_tail_direct(mu, dim, terms=400):
    """sum_{k >= dim} exp(-mu) mu^k / k! by direct summation."""
    if mu == 0:
        return 0.0
    return math.fsum(math.exp(-mu + k * math.log(mu) - math.lgamma(k + 1)) for k in range(dim, dim + terms))


def coherent_overlap(b, g):
    """<b|g> for coherent states."""
    return np.exp(-(abs(b) ** 2 + abs(g) ** 2) / 2 + np.conj(b) * g)


def displaced_overlap(alpha, n, gamma):
    """<alpha, n|gamma> = <n| D(-alpha) |gamma>."""
    d = gamma - alpha
    return (np.exp(-abs(d) ** 2 / 2) * d**n / math.sqrt(math.factorial(n))
            * np.exp(1j * np.imag(np.conj(alpha) * gamma)))


def _laguerre(n, k, x):
    # finite sum; exact in high precision
    return mp.fsum((-1) ** i * mp.binomial(n + k, n - i) * x**i / mp.factorial(i) for i in range(n + 1))


def displacement_element(m, n, alpha, dps=60):
    """<m| D(alpha) |n> from the associated Laguerre formula, in mpmath."""
    with mp.workdps(dps):
        a = mp.mpc(alpha.real, alpha.imag)
        x = abs(a) ** 2
        if m >= n:
            val = mp.sqrt(mp.factorial(n) / mp.factorial(m)) * a ** (m - n) * _laguerre(n, m - n, x)
        else:
            val = mp.sqrt(mp.factorial(m) / mp.factorial(n)) * (-mp.conj(a)) ** (n - m) * _laguerre(m, n - m, x)
        return complex(val * mp.exp(-x / 2))


def dense_power(m, n):
    out = np.eye(m.shape[0], dtype=complex)
    for _ in range(n):
        out = out @ m
    return out


def eigen_neg_log(m, cutoff=1e-10):
    """-ln(m) via numpy's eigh, kernel mapped to 0."""
    w, v = np.linalg.eigh(m)
    f = np.where(w > cutoff, -np.log(np.clip(w, cutoff, None)), 0.0)
    return (v * f) @ v.conj().T


def eigen_entropy(m, cutoff=1e-12):
    w = np.linalg.eigvalsh(m)
    w = w[w > cutoff]
    return float(-np.sum(w * np.log(w)))


def random_density(rng, d=2, rank=None):
    g = rng.normal(size=(d, rank or d)) + 1j * rng.normal(size=(d, rank or d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def qubit_with_eps(eps, rng=None):
    """A qubit density matrix whose eigenvalues are 1/2 +- eps, random eigenbasis."""
    rng = rng or np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    return (q * np.array([0.5 + eps, 0.5 - eps])) @ q.conj().T
