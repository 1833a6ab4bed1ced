"""
Closed-form eigenvalues
=======================

Only ``gamma = l.h`` and ``delta = |l||h|`` determine the spectrum of
``P``: it is ``gamma + delta`` twice, ``gamma - delta`` twice, and zeros.
We compare the formula with the Jacobi eigensolver for a random spec.
"""

import numpy as np

from trigeig import TrigSpec, build_P, eigs_of_P, jacobi_eigs

rng = np.random.default_rng(1)
n = 7
spec = TrigSpec(rng.uniform(0, 2 * np.pi, n), rng.standard_normal(n), rng.standard_normal(n))

summary = eigs_of_P(spec)
print(f"gamma = {summary.gd.gamma:.6f}, delta = {summary.gd.delta:.6f}")
print("closed form:", np.round(summary.eigenvalues(), 10))

result = jacobi_eigs(build_P(spec))
print("Jacobi     :", np.round(result.values, 10), f"({result.sweeps_used} sweeps)")
print("max gap    :", np.max(np.abs(result.values - summary.eigenvalues())))

# %%
# When l is parallel to h, L has rank one. One of gamma +/- delta is then
# zero, and P keeps only two nonzero eigenvalues.
l = rng.standard_normal(n)
degenerate = eigs_of_P(TrigSpec(spec.x, l, 2.5 * l))
print("rank-one L: predicted rank(P) =", degenerate.predicted_rank,
      "nonzero value", degenerate.lam_plus)
