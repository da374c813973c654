"""
Effective mass, damping and stiffness
=====================================

A vibrator whose inertia, damping and restoring forces carry fractional
orders behaves, at each frequency, like an ordinary mass-spring-damper with
frequency-dependent coefficients. This script tabulates those coefficients
and checks them against direct complex arithmetic.
"""

# %%
import numpy as np

from fracvib import VibratorSpec, effective_params, spectral_polynomial
from fracvib.effective import effective_damping, effective_mass

# %% [markdown]
# Constant orders first. With alpha = 2, beta = 1, lambda = 0 the classical
# coefficients come back unchanged.

# %%
classical = VibratorSpec("VI", m=2.0, c=3.0, k=5.0)
print(effective_params(classical, 0.7))

frac = VibratorSpec("VI", m=1, c=1, k=1, alpha=1.5, beta=1.0, lam=0.5)
p = effective_params(frac, 1.0)
print(f"m_eff={p.m_eff:.5f}  c_eff={p.c_eff:.5f}  k_eff={p.k_eff:.5f}")

# %% [markdown]
# The equivalent polynomial k_eff - m_eff w^2 + i w c_eff must equal
# m (iw)^alpha + c (iw)^beta + k (iw)^lambda.

# %%
w = 1.0
lhs = p.k_eff - p.m_eff * w**2 + 1j * w * p.c_eff
print("equivalent:", lhs, " spectral:", spectral_polynomial(frac, w))

# %% [markdown]
# Effective mass can be negative. With a small damping order the damping
# term contributes c w^(beta-2) cos(beta pi/2), which dominates as w -> 0.

# %%
grid = np.logspace(-4, 1, 6)
neg = VibratorSpec("VI", m=1, c=1, k=1, alpha=2.5, beta=0.9)
for w, m in zip(grid, effective_mass(neg, grid)):
    print(f"w={w:8.1e}  m_eff={m: .4e}")

# %% [markdown]
# A variable inertia order, alpha(w) = 1.10 + 1.89|cos(w/2)|, moves the
# effective damping in and out of negative territory.

# %%
var = VibratorSpec("VI", m=1, c=1, k=1, alpha="1.10 + 1.89*abs(cos(0.5*w))",
                   beta="1 + 0.99*abs(sin(w))", lam="0.99*abs(sin(w))")
grid = np.linspace(0.01, 10, 1000)
c_eff = effective_damping(var, grid)
print(f"c_eff range on (0, 10]: [{c_eff.min():.3f}, {c_eff.max():.3f}]")
print(f"fraction of grid with c_eff < 0: {np.mean(c_eff < 0):.2f}")
