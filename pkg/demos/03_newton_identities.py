"""
Power traces and the reduced quartic
====================================

P has rank at most four, so its nonzero eigenvalues are roots of a quartic.
The quartic's coefficients come from the traces of the first four powers
of P via Newton's identities. Those traces equal twice the matching traces
of L.
"""

import numpy as np

from trigeig import (TrigSpec, build_L, build_P, factorization_check, gamma_delta,
                     newton_phis, power_traces, quartic_coeffs)

rng = np.random.default_rng(2)
n = 6
spec = TrigSpec(rng.uniform(0, 2 * np.pi, n), rng.standard_normal(n), rng.standard_normal(n))

tp = power_traces(build_P(spec))
tl = power_traces(build_L(spec.l, spec.h))
for m in range(4):
    print(f"tr P^{m + 1} = {tp[m]:12.6f}   2 tr L^{m + 1} = {2 * tl[m]:12.6f}")

phi = newton_phis(tp)
print("quartic coefficients:", quartic_coeffs(phi))

gd = gamma_delta(spec.l, spec.h)
rho = gd.spectral_radius
grid = np.linspace(-2 * rho, 2 * rho, 11)
print("max deviation from (t - g + d)^2 (t - g - d)^2 on a grid:",
      factorization_check(gd, phi, grid))
print("numpy roots of the quartic:", np.sort(np.roots(quartic_coeffs(phi)).real))
print("gamma +/- delta:", gd.gamma + gd.delta, gd.gamma - gd.delta)
