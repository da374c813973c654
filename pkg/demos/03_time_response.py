"""
Free and impulse responses on the time-frequency plane
=======================================================

Freezing the effective coefficients at one frequency gives a closed-form
response x(t, w). Negative effective damping makes the response grow:
the vibrator self-vibrates.
"""

# %%
import numpy as np

from fracvib import InitialConditions, VibratorSpec, free_response, impulse_response, restricted_params

t = np.linspace(0, 50, 2001)
ic = InitialConditions(x0=1.0, v0=1.0)

# %% [markdown]
# Inertia orders below 2 dissipate; above 2 with a large damping order the
# effective damping turns negative.

# %%
for alpha, beta in ((1.6, 0.3), (1.9, 0.3), (2.4, 1.9)):
    spec = VibratorSpec("VI", m=1, c=0.2, k=1, alpha=alpha, beta=beta, lam=0.3)
    r = restricted_params(spec, 1.1)
    x = free_response(spec, 1.1, ic, t)
    print(f"alpha={alpha}: zeta={r.zeta_eff: .4f}  "
          f"max|x| on [0,10]={x.envelope(0, 10):.3g}  on [40,50]={x.envelope(40, 50):.3g}")

# %% [markdown]
# Impulse response of the same light vibrator at a few frozen frequencies.

# %%
spec = VibratorSpec("VI", m=1, c=0.2, k=1, alpha="1.10 + 1.89*abs(cos(0.1*w))",
                    beta="1 + 0.99*abs(sin(w))", lam="0.99*abs(cos(w))")
for w in (0.8, 0.9, 1.1):
    r = restricted_params(spec, w)
    if r.status.value != "OK":
        print(f"w={w}: {r.status.value}")
        continue
    h = impulse_response(spec, w, t)
    print(f"w={w}: omega_effd={r.omega_effd:.4f}  peak |h|={np.max(np.abs(h.values)):.4g}")
