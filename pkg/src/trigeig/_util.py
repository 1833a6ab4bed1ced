import numpy as np

from .errors import DimensionError, DomainError


def as_vector(v, name):
    arr = np.array(v, dtype=np.float64).reshape(-1) if np.ndim(v) <= 1 else None
    if arr is None:
        raise DimensionError(f"{name} must be one-dimensional, got shape {np.shape(v)}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def freeze(a):
    a.setflags(write=False)
    return a


def mirror_upper(m):
    """Symmetric matrix whose upper triangle (diagonal included) is taken from ``m``."""
    upper = np.triu(m)
    return upper + np.triu(m, 1).T
