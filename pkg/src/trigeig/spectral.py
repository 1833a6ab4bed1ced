"""Closed-form spectra of ``L`` and of the generalized trigonometric matrix ``P``.

With ``gamma = l.h`` and ``delta = |l| |h|`` the nonzero eigenvalues of
``L = l h^T + h l^T`` are ``gamma +/- delta``, and ``P`` carries each of
them twice. Everything else in the spectrum of ``P`` is zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import as_vector
from .core import TrigSpec
from .errors import DimensionError, DomainError

__all__ = [
    "GammaDelta",
    "SpectralSummary",
    "gamma_delta",
    "eigs_of_L",
    "eigs_of_P",
    "fir_closed_form",
    "classify_rank_L",
]

RANK_TOL = 1e-12


@dataclass(frozen=True)
class GammaDelta:
    gamma: float
    delta: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and math.isfinite(self.delta)):
            raise DomainError("gamma and delta must be finite")
        if self.delta < 0:
            raise DomainError(f"delta must be nonnegative, got {self.delta}")

    @property
    def spectral_radius(self) -> float:
        return abs(self.gamma) + self.delta


@dataclass(frozen=True)
class SpectralSummary:
    gd: GammaDelta
    lam_plus: float
    lam_minus: float
    mult_plus: int
    mult_minus: int
    zero_count: int
    predicted_rank: int

    @property
    def dim(self) -> int:
        return self.mult_plus + self.mult_minus + self.zero_count

    def eigenvalues(self) -> np.ndarray:
        """Full predicted spectrum of ``P`` in descending order."""
        vals = ([self.lam_plus] * self.mult_plus + [0.0] * self.zero_count
                + [self.lam_minus] * self.mult_minus)
        return np.sort(np.array(vals, dtype=np.float64))[::-1]


def gamma_delta(l, h) -> GammaDelta:
    l = as_vector(l, "l")
    h = as_vector(h, "h")
    if len(l) != len(h):
        raise DimensionError(f"l and h differ in length: {len(l)} != {len(h)}")
    gamma = float(np.dot(l, h))
    delta = math.sqrt(float(np.dot(l, l)) * float(np.dot(h, h)))
    # Cauchy-Schwarz can fail by an ulp or two in floating point
    delta = max(delta, abs(gamma))
    return GammaDelta(gamma, delta)


def eigs_of_L(gd: GammaDelta):
    """The two roots ``gamma + delta`` and ``gamma - delta`` of the reduced quadratic of ``L``."""
    return gd.gamma + gd.delta, gd.gamma - gd.delta


def classify_rank_L(gd: GammaDelta, tol: float = RANK_TOL) -> int:
    """Rank of ``L`` read off from ``gamma`` and ``delta``.

    0 when ``delta <= tol``; 1 when ``|gamma|`` equals ``delta`` to relative
    tolerance ``tol`` (``l`` parallel to ``h``); 2 otherwise.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if gd.delta <= tol:
        return 0
    if abs(gd.delta - abs(gd.gamma)) <= tol * gd.delta:
        return 1
    return 2


def eigs_of_P(spec: TrigSpec, tol: float = RANK_TOL) -> SpectralSummary:
    """Closed-form spectrum of ``build_P(spec)``.

    Generic case: ``gamma + delta`` and ``gamma - delta``, each twice, and
    ``2n - 4`` zeros. When ``l`` is parallel to ``h`` one of the two roots
    is zero, so only the other survives (twice). When ``l`` or ``h``
    vanishes ``P`` is zero.
    """
    gd = gamma_delta(spec.l, spec.h)
    dim = 2 * spec.n
    lam_plus, lam_minus = eigs_of_L(gd)
    rank = classify_rank_L(gd, tol)
    if rank == 2:
        return SpectralSummary(gd, lam_plus, lam_minus, 2, 2, dim - 4, 4)
    if rank == 1:
        if gd.gamma > 0:
            return SpectralSummary(gd, lam_plus, 0.0, 2, 0, dim - 2, 2)
        return SpectralSummary(gd, 0.0, lam_minus, 0, 2, dim - 2, 2)
    return SpectralSummary(gd, 0.0, 0.0, 0, 0, dim, 0)


def fir_closed_form(n: int):
    """``(lam_plus, lam_minus)`` of the FIR design matrix of block size ``n``.

    ``(n/4) * (n - 1 +/- sqrt((4n^2 - 6n + 2)/3))``, independent of the
    frequency.
    """
    if int(n) != n or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n}")
    n = int(n)
    root = math.sqrt((4 * n * n - 6 * n + 2) / 3.0)
    return n / 4.0 * (n - 1 + root), n / 4.0 * (n - 1 - root)
