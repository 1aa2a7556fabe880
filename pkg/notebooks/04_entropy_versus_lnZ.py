# %% [markdown]
# # Discrete entropy against ln Z
#
# Fit S_J = a + b ln Z to the case A nuclei and overlay a continuous
# log-linear law. The continuous coefficients are not bundled; pass your own.

# %%
import tempfile
from pathlib import Path

from shellentropy import fit_log_linear, load_dataset, occupation_to_distribution, shannon_entropy
from shellentropy import figure

records = load_dataset()
points = [
    (r.proton_number, shannon_entropy(occupation_to_distribution(r)))
    for r in records
    if r.case_tag == "A"
]
fit = fit_log_linear(points)
print(f"a={fit.intercept:.3f}  b={fit.slope:.3f}  rms={fit.rms_residual:.3f}")

# %%
a, b = 1.0, 0.4  # illustrative continuous-law coefficients
pts = figure.figure_points(records, a, b)
out = Path(tempfile.mkdtemp())
(out / "fig1.csv").write_text(figure.render_csv(pts))
(out / "fig1.svg").write_text(figure.render_svg(pts))
print("wrote", out / "fig1.svg")
