"""Construction of generalized trigonometric matrices.

Given phase arguments ``x`` and generator vectors ``l``, ``h`` (all of
length ``n``), the matrices built here are

* ``L = l h^T + h l^T`` (symmetric, rank at most 2),
* the pure trigonometric blocks ``Ahat[i, j] = cos(x_i - x_j)`` and
  ``Bhat[i, j] = sin(x_i - x_j)``,
* ``A = L * Ahat`` and ``B = L * Bhat`` (elementwise), and
* the ``2n x 2n`` block matrix ``P = [[A, B], [B^T, A]]``.

Indices are 0-based throughout. The FIR family, written 1-based as
``a_ij = (i + j - 2)/2 * cos(i w - j w)``, therefore maps to
``l[k] = k / 2`` and ``x[k] = (k + 1) * w`` for ``k = 0..n-1``.

Every returned matrix is a read-only ``float64`` ndarray. Symmetric
results are assembled from their upper triangle so that ``M == M.T``
holds bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ._util import as_vector, freeze, mirror_upper
from .errors import DimensionError, DomainError

__all__ = [
    "TrigSpec",
    "FirParams",
    "build_L",
    "build_pure",
    "build_blocks",
    "build_P",
    "build_fir",
    "hadamard_kron_check",
    "format_matrix_csv",
    "write_matrix_csv",
    "read_matrix_csv",
    "read_vector",
]


@dataclass(frozen=True)
class TrigSpec:
    """Generator data for one generalized trigonometric matrix.

    ``omega`` is informational only: it records the digital frequency when
    the generator data came from :func:`build_fir` and plays no role in construction.
    """

    x: np.ndarray
    l: np.ndarray
    h: np.ndarray
    omega: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        vecs = {}
        for name in ("x", "l", "h"):
            vecs[name] = freeze(as_vector(getattr(self, name), name))
            object.__setattr__(self, name, vecs[name])
        lengths = {name: len(v) for name, v in vecs.items()}
        if len(set(lengths.values())) != 1:
            raise DimensionError(f"x, l, h must have equal length, got {lengths}")
        if lengths["x"] < 2:
            raise DimensionError(f"need n >= 2, got n={lengths['x']}")

    @property
    def n(self) -> int:
        return len(self.x)

    def describe(self) -> str:
        if self.omega is not None:
            return f"fir(n={self.n}, omega={self.omega!r})"
        return f"trig(n={self.n})"


@dataclass(frozen=True)
class FirParams:
    n: int
    omega: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DimensionError(f"FIR block size must be an integer >= 2, got {self.n}")
        if not math.isfinite(self.omega):
            raise DomainError(f"omega must be finite, got {self.omega}")


def build_L(l, h) -> np.ndarray:
    """Return the symmetric rank-(at most)-2 matrix ``l h^T + h l^T``."""
    l = as_vector(l, "l")
    h = as_vector(h, "h")
    if len(l) != len(h):
        raise DimensionError(f"l and h differ in length: {len(l)} != {len(h)}")
    if len(l) < 2:
        raise DimensionError(f"need n >= 2, got n={len(l)}")
    L = np.outer(l, h) + np.outer(h, l)
    return freeze(mirror_upper(L))


def build_pure(x):
    """Pure trigonometric blocks for phase vector ``x``.

    Returns
    -------
    Ahat : ndarray, shape (n, n)
        ``cos(x_i - x_j)``; symmetric with unit diagonal.
    Bhat : ndarray, shape (n, n)
        ``sin(x_i - x_j)``; antisymmetric with zero diagonal.
    Phat : ndarray, shape (2n, 2n)
        ``[[Ahat, Bhat], [Bhat^T, Ahat]]``.
    """
    x = as_vector(x, "x")
    if len(x) < 2:
        raise DimensionError(f"need n >= 2, got n={len(x)}")
    diff = x[:, None] - x[None, :]
    Ahat = mirror_upper(np.cos(diff))
    np.fill_diagonal(Ahat, 1.0)
    upper = np.triu(np.sin(diff), 1)
    Bhat = upper - upper.T
    Phat = np.block([[Ahat, Bhat], [Bhat.T, Ahat]])
    return freeze(Ahat), freeze(Bhat), freeze(Phat)


def build_blocks(spec: TrigSpec):
    """Return the ``(A, B)`` blocks of ``P`` for ``spec``."""
    L = build_L(spec.l, spec.h)
    Ahat, Bhat, _ = build_pure(spec.x)
    return freeze(L * Ahat), freeze(L * Bhat)


def build_P(spec: TrigSpec) -> np.ndarray:
    """Assemble the ``2n x 2n`` generalized trigonometric matrix."""
    A, B = build_blocks(spec)
    return freeze(np.block([[A, B], [B.T, A]]))


def build_fir(p) -> TrigSpec:
    """Generator data of the FIR design matrix.

    ``p`` is a :class:`FirParams` or an ``(n, omega)`` pair.
    """
    if not isinstance(p, FirParams):
        p = FirParams(*p)
    n = int(p.n)
    k = np.arange(n, dtype=np.float64)
    return TrigSpec(x=(k + 1.0) * p.omega, l=k / 2.0, h=np.ones(n), omega=float(p.omega))


def hadamard_kron_check(spec: TrigSpec, tol: float = None) -> float:
    """Max-abs difference between ``P`` and ``Phat * kron(ones((2, 2)), L)``.

    ``tol`` is accepted for interface symmetry; the comparison against it is
    left to the caller.
    """
    if tol is not None and not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    P = build_P(spec)
    L = build_L(spec.l, spec.h)
    _, _, Phat = build_pure(spec.x)
    other = Phat * np.kron(np.ones((2, 2)), L)
    return float(np.max(np.abs(P - other)))


def format_matrix_csv(M) -> str:
    """Text of ``M`` as ``dim=<d>`` followed by ``d`` rows at 17 significant digits."""
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    lines = [f"dim={M.shape[0]}"]
    lines += [",".join(f"{v:.17g}" for v in row) for row in M]
    return "\n".join(lines) + "\n"


def write_matrix_csv(M, path) -> None:
    Path(path).write_text(format_matrix_csv(M))


def read_matrix_csv(path) -> np.ndarray:
    text = Path(path).read_text().strip().splitlines()
    if not text or not text[0].startswith("dim="):
        raise DomainError(f"{path}: missing 'dim=<d>' header")
    d = int(text[0][4:])
    rows = [line for line in text[1:] if line.strip()]
    if len(rows) != d:
        raise DimensionError(f"{path}: header says dim={d} but found {len(rows)} rows")
    M = np.array([[float(v) for v in row.split(",")] for row in rows])
    if M.shape != (d, d):
        raise DimensionError(f"{path}: expected {d}x{d} values, got {M.shape}")
    return M


def read_vector(path) -> np.ndarray:
    """Read a vector from text: numbers separated by commas, whitespace or newlines.

    A leading ``dim=<d>`` header line is accepted and checked.
    """
    lines = Path(path).read_text().strip().splitlines()
    expected = None
    if lines and lines[0].startswith("dim="):
        expected = int(lines[0][4:])
        lines = lines[1:]
    tokens = " ".join(lines).replace(",", " ").split()
    v = np.array([float(t) for t in tokens])
    if expected is not None and len(v) != expected:
        raise DimensionError(f"{path}: header says dim={expected} but found {len(v)} values")
    return v
