"""
Rank of block matrices built from a symplectic form
===================================================

For U of full column rank 2r, ``Z = [[U U^T, U J U^T], [., U U^T]]`` has
rank 2r, not 4r. The pure trigonometric matrix is the case r = 1 with
rows ``(cos x_i, -sin x_i)``, so its rank is 2.
"""

import numpy as np

from trigeig import TrigSpec, build_pure, build_Z, matrix_rank, rank_bound_check, trig_U

rng = np.random.default_rng(3)
for r in (1, 2, 3):
    U = rng.standard_normal((12, 2 * r))
    print(f"r = {r}: Z is 24x24, rank {matrix_rank(build_Z(U).Z)}")

x = rng.uniform(0, 2 * np.pi, 5)
print("Z(trig_U(x)) == Phat(x):", np.allclose(build_Z(trig_U(x)).Z, build_pure(x)[2]))

# %%
# The rank of P is rank(L) times rank(Phat).
spec = TrigSpec(x, rng.standard_normal(5), rng.standard_normal(5))
print(rank_bound_check(spec))
l = rng.standard_normal(5)
print(rank_bound_check(TrigSpec(x, l, l)))
