"""Power traces, Newton's identities and the reduced quartic of ``P``."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TrigSpec, build_L, build_P
from .errors import DimensionError, DomainError
from .spectral import GammaDelta, gamma_delta

__all__ = [
    "SymFunReport",
    "power_traces",
    "trace_identity_residuals",
    "newton_phis",
    "gamma_m_closed",
    "quartic_coeffs",
    "quartic_eval",
    "factorization_check",
    "symfun_report",
    "phis_closed",
]


@dataclass(frozen=True)
class SymFunReport:
    power_traces_P: tuple
    power_traces_L: tuple
    gamma_m: tuple
    phi: tuple
    quartic_coeffs: tuple


def power_traces(M, max_m: int = 4) -> np.ndarray:
    """``[tr M, tr M^2, tr M^3, tr M^4][:max_m]`` for symmetric ``M``.

    Uses entrywise sums over ``M`` and ``M @ M`` only, so no third or
    fourth power is ever formed.
    """
    if max_m not in (1, 2, 3, 4):
        raise DomainError(f"max_m must be in 1..4, got {max_m}")
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    out = [float(np.trace(M))]
    if max_m >= 2:
        out.append(float(np.sum(M * M)))
    if max_m >= 3:
        M2 = M @ M
        out.append(float(np.sum(M2 * M)))
    if max_m >= 4:
        out.append(float(np.sum(M2 * M2)))
    return np.array(out)


def trace_identity_residuals(spec: TrigSpec) -> np.ndarray:
    """``|tr P^m - 2 tr L^m|`` for ``m = 1..4``."""
    tp = power_traces(build_P(spec))
    tl = power_traces(build_L(spec.l, spec.h))
    return np.abs(tp - 2.0 * tl)


def newton_phis(p) -> np.ndarray:
    """Elementary symmetric polynomials ``phi_1..phi_4`` from power sums ``p_1..p_4``."""
    p1, p2, p3, p4 = (float(v) for v in p)
    phi1 = p1
    phi2 = (p1 * p1 - p2) / 2.0
    phi3 = (phi2 * p1 - phi1 * p2 + p3) / 3.0
    phi4 = (phi3 * p1 - phi2 * p2 + phi1 * p3 - p4) / 4.0
    return np.array([phi1, phi2, phi3, phi4])


def gamma_m_closed(gd: GammaDelta) -> np.ndarray:
    """Power sums ``2 tr L^m`` of the spectrum of ``P`` written in ``gamma``, ``delta``."""
    g, d = gd.gamma, gd.delta
    g2, d2 = g * g, d * d
    return 4.0 * np.array([
        g,
        g2 + d2,
        g * g2 + 3.0 * g * d2,
        g2 * g2 + 6.0 * g2 * d2 + d2 * d2,
    ])


def quartic_coeffs(phi) -> np.ndarray:
    """Coefficients ``(1, -phi1, phi2, -phi3, phi4)``, highest degree first."""
    phi = np.asarray(phi, dtype=np.float64)
    return np.array([1.0, -phi[0], phi[1], -phi[2], phi[3]])


def quartic_eval(phi, lam: float) -> float:
    phi1, phi2, phi3, phi4 = (float(v) for v in phi)
    # Horner form of lam^4 - phi1 lam^3 + phi2 lam^2 - phi3 lam + phi4
    return (((lam - phi1) * lam + phi2) * lam - phi3) * lam + phi4


def factorization_check(gd: GammaDelta, phi, grid) -> float:
    """Max over ``grid`` of ``|chi(lam) - (lam - g + d)^2 (lam - g - d)^2|``."""
    grid = np.asarray(grid, dtype=np.float64).reshape(-1)
    if grid.size == 0:
        raise DomainError("grid must be nonempty")
    g, d = gd.gamma, gd.delta
    worst = 0.0
    for lam in grid:
        factored = (lam - g + d) ** 2 * (lam - g - d) ** 2
        worst = max(worst, abs(quartic_eval(phi, lam) - factored))
    return worst


def symfun_report(spec: TrigSpec) -> SymFunReport:
    tp = power_traces(build_P(spec))
    tl = power_traces(build_L(spec.l, spec.h))
    gamma_m = 2.0 * tl
    phi = newton_phis(gamma_m)
    return SymFunReport(
        power_traces_P=tuple(tp),
        power_traces_L=tuple(tl),
        gamma_m=tuple(gamma_m),
        phi=tuple(phi),
        quartic_coeffs=tuple(quartic_coeffs(phi)),
    )


def phis_closed(gd: GammaDelta) -> np.ndarray:
    """``(4g, 6g^2 - 2d^2, 4(g^3 - g d^2), (g^2 - d^2)^2)``."""
    g, d = gd.gamma, gd.delta
    return np.array([
        4.0 * g,
        6.0 * g * g - 2.0 * d * d,
        4.0 * (g ** 3 - g * d * d),
        (g * g - d * d) ** 2,
    ])
