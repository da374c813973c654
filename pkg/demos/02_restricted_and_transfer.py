"""
Damping ratio, natural frequency and the transfer function
===========================================================

Where the effective mass is positive the usual modal quantities are
defined. This script sweeps them for a light-damping vibrator and compares
the transfer function with 1/D(w).
"""

# %%
import numpy as np

from fracvib import VibratorSpec, restricted_params, spectral_polynomial, transfer_function
from fracvib.restricted import Status

spec = VibratorSpec("VI", m=1, c=0.2, k=1, alpha=1.9, beta=1.0, lam=0.0)
rp = restricted_params(spec, 1.0)
print(rp)

# %% [markdown]
# A sweep records a status per frequency instead of failing.

# %%
spec = VibratorSpec("VI", m=1, c=1, k=1, alpha=1.3, beta=0.3, lam=0.3)
for w in (0.1, 0.5, 1.0, 2.0, 5.0):
    r = restricted_params(spec, w)
    print(f"w={w:4.1f}  status={r.status.value:16s} zeta={r.zeta_eff}")

# %% [markdown]
# Transfer function of a variable-order vibrator on (0, 2].

# %%
spec = VibratorSpec("VI", m=1, c=0.2, k=1, alpha="1.10 + 1.89*abs(cos(w))",
                    beta="1 + 0.99*abs(sin(w))", lam="0.99*abs(cos(w))")
worst = 0.0
for w in np.linspace(0.01, 2, 200):
    if restricted_params(spec, w).status is Status.MASS_NON_POSITIVE:
        continue
    fr = transfer_function(spec, w)
    ref = 1 / spectral_polynomial(spec, w)
    worst = max(worst, abs(fr.H - ref) / abs(ref))
print(f"max relative |H - 1/D| = {worst:.2e}")

fr = transfer_function(spec, 1.0)
print(f"|H(1)| = {fr.amplitude:.4f}, phase lag = {fr.phase:.4f} rad")
