"""Powers of the field state from powers of the qubit state.

After the dispersive interaction the joint state is pure, so every power of
the field density matrix is a partial trace over the atom weighted by a
power of the atomic density matrix. This script checks that numerically and
shows that the traces of all powers agree.
"""

import math

import numpy as np

from entropy_operator import ModelParams, bipartite, qubit

spacer = "_" * 60

p = ModelParams.from_chit(beta=1.0, chit=0.3)
j = bipartite.build_joint(p)
rho_a = bipartite.reduce_atom(j)
rho_b = bipartite.reduce_field(j)

print(f"beta = {p.beta.real}, chi t = {p.chit}, Fock dimension = {p.dim}")
print("atomic density matrix:")
print(np.round(rho_a, 6))

print(spacer)
print("\nn   Tr(rho_B^(n+1))        Tr(rho_A^(n+1))        |rho_B^(n+1) - Tr_A{rho rho_A^n}|")
for n in range(1, 7):
    lhs = bipartite.field_power(j, n + 1)
    rhs = bipartite.weighted_atom_trace(j, qubit.atom_power(rho_a, n))
    ta = np.trace(qubit.atom_power(rho_a, n + 1)).real
    print(f"{n}   {np.trace(lhs).real:.15f}   {ta:.15f}   {np.max(np.abs(lhs - rhs)):.2e}")

print(spacer)
sd = qubit.spectral_data(rho_a)
print("\nEvery qubit power is a combination of rho_A and the identity:")
print(f"eps = {sd.eps:.12f}, det = {sd.det:.12f}")
for n in (2, 5, 10):
    print(f"  G({n}) = {qubit.g_coeff(sd, n):.12f},  rho_A^{n} = G({n}) rho_A - det G({n - 1}) 1")

print("\nThe field state has the same two nonzero eigenvalues as the atom:")
w = np.linalg.eigvalsh(rho_b)
print(f"  top eigenvalues of rho_B: {w[-1]:.12f}, {w[-2]:.12f}")
print(f"  1/2 +- eps            : {0.5 + sd.eps:.12f}, {0.5 - sd.eps:.12f}")
print(f"  remaining |eigenvalues| <= {np.max(np.abs(w[:-2])):.1e}")
assert math.isclose(w[-1], sd.lambda_plus, abs_tol=1e-9)
