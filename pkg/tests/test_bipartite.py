import math

import numpy as np
import pytest

from entropy_operator import ModelParams, bipartite, fock
from entropy_operator.errors import TruncationError

from conftest import GRID
from _oracles import coherent_overlap, dense_power, random_density


def joint(beta, chit, dim=None):
    return bipartite.build_joint(ModelParams.from_chit(beta, chit, dim=dim))


def test_params_defaults_and_guard():
    p = ModelParams(beta=2.0)
    assert p.dim == 40 and p.chit == 0.0
    assert ModelParams(beta=1, chi=2.0, t=0.25).chit == 0.5
    with pytest.raises(TruncationError):
        ModelParams(beta=1.0, dim=3)


def test_initial_state_is_product():
    j = joint(1.0, 0.0)
    np.testing.assert_allclose(j.c, j.s)
    np.testing.assert_allclose(j.c, fock.coherent_state(1.0, j.dim) / math.sqrt(2))
    np.testing.assert_allclose(bipartite.reduce_atom(j), np.full((2, 2), 0.5), atol=1e-14)
    rho_b = bipartite.reduce_field(j)
    assert np.max(np.abs(rho_b @ rho_b - rho_b)) < 1e-10


def test_revival_at_pi():
    j = joint(1.0, math.pi)
    np.testing.assert_allclose(j.c, j.s, atol=1e-15)
    np.testing.assert_allclose(j.c, fock.coherent_state(-1.0, j.dim) / math.sqrt(2), atol=1e-15)
    rho_a = bipartite.reduce_atom(j)
    assert abs(np.linalg.det(rho_a)) < 1e-14


def test_overlap_at_quarter_period(model_point):
    j = bipartite.build_joint(model_point)
    cs = fock.inner(j.c, j.s)
    assert abs(cs - math.exp(-2) / 2) < 1e-12
    assert abs(cs - 0.5 * coherent_overlap(-1j, 1j)) < 1e-12
    rho_a = bipartite.reduce_atom(j)
    np.testing.assert_allclose(np.diag(rho_a), [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose([rho_a[0, 1], rho_a[1, 0]], [math.exp(-2) / 2] * 2, atol=1e-12)


def test_overlap_matches_coherent_formula():
    beta, ct = 0.8 + 0.3j, 0.7
    j = joint(beta, ct)
    c0, s0 = beta * np.exp(-1j * ct), beta * np.exp(1j * ct)
    assert abs(fock.inner(j.c, j.s) - 0.5 * coherent_overlap(c0, s0)) < 1e-12


@pytest.mark.parametrize("beta, chit", GRID)
def test_joint_state_invariants(beta, chit):
    j = joint(beta, chit)
    assert abs(np.trace(j.blocks[0][0]) + np.trace(j.blocks[1][1]) - 1) < 1e-9
    m = j.matrix()
    assert np.max(np.abs(m - m.conj().T)) < 1e-12
    w = np.linalg.eigvalsh(m)
    assert w.min() > -1e-9
    assert abs(np.trace(m @ m) - 1) < 1e-10
    rho_a = bipartite.reduce_atom(j)
    assert abs(np.trace(rho_a) - 1) < 1e-12
    rho_b = bipartite.reduce_field(j)
    assert abs(np.trace(rho_b) - 1) < 1e-12


@pytest.mark.parametrize("beta, chit", GRID)
def test_schmidt_spectrum(beta, chit):
    j = joint(beta, chit)
    rho_a = bipartite.reduce_atom(j)
    eps = math.sqrt(((rho_a[0, 0] - rho_a[1, 1]).real / 2) ** 2 + abs(rho_a[0, 1]) ** 2)
    w = np.linalg.eigvalsh(bipartite.reduce_field(j))
    np.testing.assert_allclose(w[-2:], [0.5 - eps, 0.5 + eps], atol=1e-9)
    assert np.max(np.abs(w[:-2])) < 1e-9
    assert np.sum(w > 1e-9) == 2


def test_field_power_small_cases(model_point):
    j = bipartite.build_joint(model_point)
    np.testing.assert_array_equal(bipartite.field_power(j, 1), bipartite.reduce_field(j))
    c, s = j.c, j.s
    cc, ss, cs = fock.inner(c, c), fock.inner(s, s), fock.inner(c, s)
    by_dyads = (np.outer(c, c.conj()) * cc + np.outer(s, s.conj()) * ss
                + np.outer(c, s.conj()) * cs + np.outer(s, c.conj()) * np.conj(cs))
    assert np.max(np.abs(bipartite.field_power(j, 2) - by_dyads)) < 1e-10
    with pytest.raises(ValueError):
        bipartite.field_power(j, 0)


@pytest.mark.parametrize("beta, chit", GRID)
def test_trace_identity(beta, chit):
    j = joint(beta, chit)
    rho_a = bipartite.reduce_atom(j)
    eps = math.sqrt(abs(rho_a[0, 1]) ** 2 + ((rho_a[0, 0] - rho_a[1, 1]).real / 2) ** 2)
    for n in range(1, 7):
        tb = np.trace(bipartite.field_power(j, n + 1))
        ta = np.trace(dense_power(rho_a, n + 1))
        assert abs(tb - ta) < 1e-9
        assert abs(tb - ((0.5 + eps) ** (n + 1) + (0.5 - eps) ** (n + 1))) < 1e-9


def test_weighted_traces_identity_inputs(model_point):
    j = bipartite.build_joint(model_point)
    np.testing.assert_allclose(bipartite.weighted_atom_trace(j, np.eye(2)), bipartite.reduce_field(j))
    np.testing.assert_allclose(bipartite.weighted_field_trace(j, np.eye(j.dim)), bipartite.reduce_atom(j))
    with pytest.raises(ValueError):
        bipartite.weighted_field_trace(j, np.eye(3))


@pytest.mark.parametrize("beta, chit", GRID)
def test_power_transfer_between_subsystems(beta, chit):
    j = joint(beta, chit)
    rho_a = bipartite.reduce_atom(j)
    rho_b = bipartite.reduce_field(j)
    for n in range(1, 5):
        lhs = bipartite.field_power(j, n + 1)
        rhs = bipartite.weighted_atom_trace(j, dense_power(rho_a, n))
        assert np.max(np.abs(lhs - rhs)) < 1e-9
        lhs = dense_power(rho_a, n + 1)
        rhs = bipartite.weighted_field_trace(j, dense_power(rho_b, n))
        assert np.max(np.abs(lhs - rhs)) < 1e-9


def test_power_transfer_random_pure_states():
    # the transfer identity is not specific to the dispersive model
    rng = np.random.default_rng(7)
    for _ in range(20):
        dim = 6
        psi = rng.normal(size=2 * dim) + 1j * rng.normal(size=2 * dim)
        psi /= np.linalg.norm(psi)
        c, s = psi[:dim], psi[dim:]
        kets = (c, s)
        blocks = tuple(tuple(np.outer(u, v.conj()) for v in kets) for u in kets)
        j = bipartite.JointState(c=c, s=s, blocks=blocks)
        rho_a = bipartite.reduce_atom(j)
        for n in range(1, 5):
            lhs = bipartite.field_power(j, n + 1)
            rhs = bipartite.weighted_atom_trace(j, dense_power(rho_a, n))
            assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_mixed_states_break_the_transfer():
    # sanity: the identity genuinely depends on purity of the joint state
    rng = np.random.default_rng(3)
    rho = random_density(rng, d=4)
    blocks = ((rho[:2, :2], rho[:2, 2:]), (rho[2:, :2], rho[2:, 2:]))
    j = bipartite.JointState(c=np.zeros(2), s=np.zeros(2), blocks=blocks)
    rho_a = np.array([[np.trace(blocks[a][b]) for b in range(2)] for a in range(2)])
    lhs = bipartite.field_power(j, 2)
    rhs = bipartite.weighted_atom_trace(j, rho_a)
    assert np.max(np.abs(lhs - rhs)) > 1e-3
