"""Independent numerical reference: cyclic Jacobi eigenvalues, ranks, products.

Nothing here knows about trigonometric structure. The closed forms elsewhere
in the package are checked against these routines.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError

__all__ = ["EigResult", "jacobi_eigs", "numerical_rank", "mat_mul", "trace"]

DEFAULT_THRESHOLD = 1e-12
DEFAULT_MAX_SWEEPS = 50
# pivots smaller than this are left alone to avoid churning on denormals
PIVOT_FLOOR = 1e-300


@dataclass(frozen=True)
class EigResult:
    values: np.ndarray  # descending
    sweeps_used: int
    off_diag_norm: float


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return np.sqrt(s)


@numba.njit(cache=True)
def _sweep(a):
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if abs(apq) < PIVOT_FLOOR:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            for k in range(n):
                akp = a[k, p]
                akq = a[k, q]
                a[k, p] = c * akp - s * akq
                a[k, q] = s * akp + c * akq
            for k in range(n):
                apk = a[p, k]
                aqk = a[q, k]
                a[p, k] = c * apk - s * aqk
                a[q, k] = s * apk + c * aqk
            # annihilated exactly in exact arithmetic; pin it to keep symmetry clean
            a[p, q] = 0.0
            a[q, p] = 0.0


def jacobi_eigs(M, threshold: float = DEFAULT_THRESHOLD,
                max_sweeps: int = DEFAULT_MAX_SWEEPS) -> EigResult:
    """Eigenvalues of a real symmetric matrix by cyclic-by-row Jacobi rotations.

    Iterates full sweeps over the strict upper triangle until the
    off-diagonal Frobenius norm drops to ``threshold * ||M||_F``.

    Raises
    ------
    ConvergenceError
        If ``max_sweeps`` sweeps do not reach the threshold.
    """
    a = np.array(M, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    if not threshold > 0:
        raise DomainError(f"threshold must be positive, got {threshold}")
    if max_sweeps < 1:
        raise DomainError(f"max_sweeps must be >= 1, got {max_sweeps}")

    target = threshold * np.linalg.norm(a)
    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off:.3e} > {target:.3e})",
                off_diag_norm=off, sweeps_used=sweeps)
        _sweep(a)
        sweeps += 1
        off = _off_norm(a)
    values = np.sort(np.diag(a))[::-1].copy()
    return EigResult(values=values, sweeps_used=sweeps, off_diag_norm=float(off))


def numerical_rank(values, dim: int, tol_scale: float = 1e-12) -> int:
    """Count eigenvalue magnitudes above ``tol_scale * dim * max(1, max|v|)``."""
    v = np.abs(np.asarray(values, dtype=np.float64))
    if not np.all(np.isfinite(v)):
        raise DomainError("values must be finite")
    if v.size == 0:
        return 0
    cutoff = tol_scale * dim * max(1.0, float(v.max()))
    return int(np.count_nonzero(v > cutoff))


def mat_mul(X, Y) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.float64)
    if X.ndim != 2 or Y.ndim != 2 or X.shape[1] != Y.shape[0]:
        raise DimensionError(f"cannot multiply shapes {X.shape} and {Y.shape}")
    return X @ Y


def trace(X) -> float:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DimensionError(f"trace needs a square matrix, got shape {X.shape}")
    return float(np.trace(X))
