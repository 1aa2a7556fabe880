# %% [markdown]
# # Discrete measures of order and disorder
#
# Shannon entropy, Onicescu information energy and the Stotland entropy for a
# few small distributions, including the extremes of total order and total
# disorder.

# %%
import math

from shellentropy import (
    DegenerateDistribution,
    NormalizedDistribution,
    full_report,
    onicescu_energy,
    shannon_entropy,
    stotland_excess,
)

# %% [markdown]
# A point mass is perfectly ordered: S = 0 and E = 1. The uniform distribution
# over k outcomes is maximally disordered: S = ln k and E = 1/k.

# %%
for k in (1, 2, 4, 8):
    u = NormalizedDistribution((1 / k,) * k)
    print(f"k={k}: S={shannon_entropy(u):.4f} (ln k={math.log(k):.4f})  E={onicescu_energy(u):.4f}")

# %% [markdown]
# The helium row: two shells almost equally populated.

# %%
rep = full_report(NormalizedDistribution((0.485, 0.515)))
print(f"S={rep.shannon_jaynes:.3f}  S_E={rep.onicescu_information:.3f}  "
      f"S_0={rep.minimum_uncertainty:.3f}  F={rep.stotland_excess:.3f}  S_F={rep.stotland_total:.3f}")

# %% [markdown]
# The Stotland sum has a product weight that blows up when two probabilities
# coincide. Closed-shell calcium (1s and 2s both at 0.1) is refused outright.

# %%
try:
    stotland_excess(NormalizedDistribution((0.1, 0.3, 0.5, 0.1)))
except DegenerateDistribution as exc:
    print("refused:", exc)

print(full_report(NormalizedDistribution((0.1, 0.3, 0.5, 0.1))))
