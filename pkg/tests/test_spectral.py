import math

import numpy as np
import pytest

from entropy_operator import bipartite, spectral
from entropy_operator.spectral import eig_hermitian, matrix_neg_log


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (x + x.conj().T)


def test_diagonal():
    sp = eig_hermitian(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(sp.eigenvalues, [1, 2, 3])


@pytest.mark.parametrize("n, seed", [(2, 0), (7, 1), (20, 2)])
def test_reconstruction(n, seed):
    a = random_hermitian(n, seed)
    sp = eig_hermitian(a)
    assert np.max(np.abs(sp.reconstruct() - a)) < 1e-9
    v = sp.eigenvectors
    assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-9
    scale = np.linalg.norm(a)
    for lam, vec in zip(sp.eigenvalues, v.T):
        assert np.linalg.norm(a @ vec - lam * vec) < 1e-9 * scale
    # cross-check against LAPACK
    np.testing.assert_allclose(sp.eigenvalues, np.linalg.eigvalsh(a), atol=1e-10)


def test_shift_invariance():
    a = random_hermitian(12, 5)
    c = 0.731
    shifted = eig_hermitian(a + c * np.eye(12)).eigenvalues
    assert np.max(np.abs(shifted - (eig_hermitian(a).eigenvalues + c))) < 1e-10


def test_rejects_non_hermitian():
    with pytest.raises(ValueError):
        eig_hermitian(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_field_state_spectrum(model_point):
    rho_b = bipartite.reduce_field(bipartite.build_joint(model_point))
    lam = eig_hermitian(rho_b).eigenvalues
    eps = math.exp(-2) / 2
    np.testing.assert_allclose(lam[-2:], [0.5 - eps, 0.5 + eps], atol=1e-9)
    assert np.max(np.abs(lam[:-2])) < 1e-9


def test_neg_log_basic():
    np.testing.assert_allclose(matrix_neg_log(np.eye(2) / 2), math.log(2) * np.eye(2), atol=1e-14)


def test_neg_log_kernel_policies():
    m = np.diag([0.5, 0.5, 0.0])
    np.testing.assert_allclose(matrix_neg_log(m), np.diag([math.log(2), math.log(2), 0]), atol=1e-14)
    with pytest.raises(ValueError):
        matrix_neg_log(m, kernel_policy="reject")
    with pytest.raises(ValueError):
        matrix_neg_log(np.diag([1.1, -0.1]))


def test_von_neumann_entropy():
    assert spectral.von_neumann_entropy(np.eye(4) / 4) == pytest.approx(math.log(4), abs=1e-13)
    assert spectral.von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
