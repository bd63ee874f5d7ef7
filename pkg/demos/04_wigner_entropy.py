"""Wigner function of the field entropy operator.

Evaluated two ways: as the displaced-parity series over D(alpha)|n> and by
the closed-form Gaussian-times-oscillation expression valid for real beta.
Plots the two surfaces and their difference if matplotlib is installed.
"""

import math

import numpy as np

from entropy_operator import ModelParams, wigner

p = ModelParams.from_chit(beta=2.0, chit=math.pi / 2)
xs = np.linspace(-3, 3, 41)
ys = np.linspace(-3, 3, 41)

grid = wigner.wigner_grid(p, xs, ys, source="both")
print(f"beta = {p.beta.real}, chi t = {p.chit:.4f}, Fock dimension = {p.dim}")
print(f"grid {len(xs)} x {len(ys)}: max |series - closed| = {grid.max_abs_diff:.2e}")
i, k = np.unravel_index(np.argmin(grid.series), grid.series.shape)
print(f"minimum W = {grid.series[i, k]:.6f} at alpha = {xs[i]:+.2f} {ys[k]:+.2f}i")
i, k = np.unravel_index(np.argmax(grid.series), grid.series.shape)
print(f"maximum W = {grid.series[i, k]:.6f} at alpha = {xs[i]:+.2f} {ys[k]:+.2f}i")

# with the customary 2/pi normalisation
std = wigner.wigner_grid(p, [0.0], [0.0], source="closed", convention="standard")
print(f"W(0) with 2/pi prefactor: {std.closed[0, 0]:.6f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    extent = (xs[0], xs[-1], ys[0], ys[-1])
    for ax, data, title in zip(axes, (grid.series, grid.closed, grid.series - grid.closed),
                               ("parity series", "closed form", "difference")):
        im = ax.imshow(data.T, origin="lower", extent=extent, cmap="RdBu_r")
        ax.set_title(title)
        ax.set_xlabel("Re alpha")
        ax.set_ylabel("Im alpha")
        fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig("wigner_entropy.png", dpi=120)
    print("wrote wigner_entropy.png")
