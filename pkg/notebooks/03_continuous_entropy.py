# %% [markdown]
# # Continuous entropies of radial densities
#
# Position- and momentum-space entropies of isotropic Gaussians, and the
# scale invariance of their sum.

# %%
import math

import numpy as np

from shellentropy import (
    GaussianParams,
    continuous_information_energy,
    differential_entropy,
    gaussian_density,
    gaussian_information_energy,
    information_energy_1d,
    total_entropy,
)

rho = gaussian_density(1.0, np.linspace(0, 10, 2000))
print("S_r =", differential_entropy(rho), " exact:", 1.5 * math.log(2 * math.pi * math.e))

# %% [markdown]
# Stretching the position width by lambda and shrinking the momentum width by
# the same factor leaves S_r + S_k unchanged.

# %%
for lam in (0.5, 1.0, 2.0, 4.0):
    pos = gaussian_density(lam, np.linspace(0, 12 * lam, 4000), "position")
    mom = gaussian_density(0.5 / lam, np.linspace(0, 6 / lam, 4000), "momentum")
    rep = total_entropy(pos, mom)
    print(f"lambda={lam}: S_r={rep.s_position:.4f} S_k={rep.s_momentum:.4f} S={rep.s_total:.6f}")
print("3(1 + ln pi) =", 3 * (1 + math.log(math.pi)))

# %% [markdown]
# Information energy: narrower densities have more of it.

# %%
for sigma in (0.5, 1.0, 2.0):
    x = np.linspace(-12 * sigma, 12 * sigma, 4001)
    g = np.exp(-(x**2) / (2 * sigma**2)) / (math.sqrt(2 * math.pi) * sigma)
    print(sigma, information_energy_1d(x, g), gaussian_information_energy(GaussianParams(0, sigma)))

print("3D, sigma=1:", continuous_information_energy(rho), " halved radii:",
      continuous_information_energy(rho.scaled(0.5)))
