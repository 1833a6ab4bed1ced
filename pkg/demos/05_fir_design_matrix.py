"""
The FIR design matrix
=====================

The FIR filter design matrix has entries ``(i + j - 2)/2 * cos((i - j) w)``
and the matching sine entries. Its two nonzero eigenvalues, each of
multiplicity two, are ``(n/4)(n - 1 +/- sqrt((4n^2 - 6n + 2)/3))`` and do
not depend on the frequency w.
"""

import numpy as np

from trigeig import build_fir, build_P, fir_closed_form, jacobi_eigs

print(f"{'n':>3} {'lam+':>12} {'lam-':>12}   max oracle gap over 5 frequencies")
for n in (2, 3, 5, 10, 20):
    lp, lm = fir_closed_form(n)
    expected = np.array([lp, lp] + [0.0] * (2 * n - 4) + [lm, lm])
    gaps = [np.max(np.abs(jacobi_eigs(build_P(build_fir((n, w)))).values - expected))
            for w in (0.0, 0.7, np.pi / 2, 2.0, 5.9)]
    print(f"{n:3d} {lp:12.6f} {lm:12.6f}   {max(gaps):.2e}")
