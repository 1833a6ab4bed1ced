"""
Building generalized trigonometric matrices
===========================================

A matrix in this family is fixed by three vectors: phases ``x`` and
generators ``l``, ``h``. The generators give the rank-two weight matrix
``L = l h^T + h l^T``. The phases give the cosine and sine blocks.
"""

import numpy as np

from trigeig import TrigSpec, build_L, build_P, build_pure, hadamard_kron_check

rng = np.random.default_rng(0)
n = 4
spec = TrigSpec(x=rng.uniform(0, 2 * np.pi, n), l=rng.standard_normal(n), h=rng.standard_normal(n))

L = build_L(spec.l, spec.h)
Ahat, Bhat, Phat = build_pure(spec.x)
P = build_P(spec)
np.set_printoptions(precision=3, suppress=True)
print("L =\n", L)
print("Bhat is antisymmetric:", np.array_equal(Bhat, -Bhat.T))
print("P is", P.shape, "and exactly symmetric:", np.array_equal(P, P.T))

# P is the pure matrix weighted entrywise by two copies of L in each direction
print("max |P - Phat * kron(ones, L)| =", hadamard_kron_check(spec))

# With every phase equal the sine block vanishes and P splits into two copies of L
flat = TrigSpec(np.zeros(n), spec.l, spec.h)
print("x = 0 gives diag(L, L):", np.array_equal(build_P(flat)[:n, :n], L))
