"""
Generalised Rayleigh damping and the verification suite
=======================================================

With no primary damping, fractional inertia and restoring forces still
dissipate energy. The effective damping splits as a(w) m + b(w) k, a
frequency-dependent Rayleigh form.
"""

# %%
import numpy as np

from fracvib import VibratorSpec, rayleigh_coefficients
from fracvib import verify

spec = VibratorSpec("VI", m=1, c=0, k=1, alpha="1.80 + 1.19*abs(sin(w))", lam="0.99*abs(cos(w))")
for w in (0.5, 1.0, 2.0, 4.0):
    d = rayleigh_coefficients(spec, w)
    print(f"w={w}: a={d.a: .4f}  b={d.b: .4f}  c_gray={d.c_gray: .4f}")

# %% [markdown]
# Inertia orders above 2 make a(w) negative.

# %%
print("a at alpha=2.5, w=1:", rayleigh_coefficients(VibratorSpec("VI", m=1, k=1, alpha=2.5), 1.0).a)

# %% [markdown]
# The same checks the CLI runs with ``fracvib verify``.

# %%
for report in verify.run_all(seed=42):
    s = report.summary()
    print(f"{'PASS' if s['passed'] else 'FAIL'}  {s['check']:22s} worst {s['worst_error']:.2e}")
