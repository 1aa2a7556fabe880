# %% [markdown]
# # Shell occupations of light nuclei
#
# The bundled dataset holds proton shell probabilities for 4He to 40Ca in
# three model cases: A (short-range correlations), B (state-dependent
# correlations) and C (independent particle model).

# %%
from shellentropy import depletion, ipm_occupation, load_dataset, occupation_to_distribution
from shellentropy.occupancy import load_reference_entropies
from shellentropy.tables import build_table, check_table, format_text

records = load_dataset()
table = build_table(records)
print(format_text(table.header, table.cells()))

# %% [markdown]
# Compare the recomputed columns with the tabulated ones. One cell disagrees:
# 24Mg (A) S_F, whose tabulated value is reproduced only by dropping the 2p
# shell (0.010) from the Stotland sum.

# %%
for check in check_table(table, load_reference_entropies()):
    print(f"{check.label:<10} {'ok' if check.ok else '; '.join(check.mismatches)}")

# %% [markdown]
# Independent particle model filling, and the fraction of protons missing
# from the shells that are full in it.

# %%
for Z in (2, 8, 20):
    rec = ipm_occupation(Z)
    print(rec.label, [f"{p:.3f}" for p in occupation_to_distribution(rec)])

for rec in records:
    rep = depletion(rec)
    print(f"{rep.label:<10} {100 * rep.depletion:5.1f}%")
