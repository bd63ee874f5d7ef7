"""Atomic entropy and its fluctuation over one period of the interaction.

The entropy vanishes whenever chi t is a multiple of pi (the two field
components coincide again) and approaches ln 2 in between for large beta.
The field entropy, computed from the field entropy operator, tracks the
atomic one at every time.
"""

import math

import numpy as np

from entropy_operator import ModelParams, bipartite, field, qubit

chits = np.linspace(0, 2 * math.pi, 25)

for beta in (0.5, 1.0, 2.0):
    print(f"\nbeta = {beta}")
    print("  chi t     <S_A>      dS_A      Tr(rho_B S_B)   |diff|")
    for ct in chits:
        p = ModelParams.from_chit(beta, ct)
        j = bipartite.build_joint(p)
        rho_a = bipartite.reduce_atom(j)
        s_a = qubit.mean_atom_entropy(rho_a)
        ds = qubit.atom_entropy_fluctuation(rho_a)
        s_b = field.mean_field_entropy(j)
        print(f"  {ct:6.3f}   {s_a:8.6f}   {ds:8.6f}   {s_b:12.6f}   {abs(s_a - s_b):.1e}")

print(f"\nln 2 = {math.log(2):.6f}")

# The same table is available from the command line:
#   entropy-operator entropy-scan --beta-re 1 --chit 0:6.283185307179586:25
