"""Randomized property suite comparing every closed form against the oracle.

Each trial draws a spec from its own generator seeded with
``(seed, trial)``, so the report does not depend on evaluation order.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .core import TrigSpec, build_fir, build_L, build_P, build_pure, hadamard_kron_check
from .oracle import jacobi_eigs, numerical_rank
from .rank import build_Z, matrix_rank, rank_bound_check
from .spectral import eigs_of_P, fir_closed_form, gamma_delta
from .symfun import (factorization_check, gamma_m_closed, newton_phis, phis_closed,
                     power_traces)

__all__ = [
    "Check",
    "VerifyReport",
    "FIR_OMEGAS",
    "random_spec",
    "random_orthogonal",
    "spectrum_residual",
    "spec_checks",
    "fir_checks",
    "run_suite",
]

EPS = np.finfo(np.float64).eps
FIR_OMEGAS = (0.0, 0.7, math.pi / 2, 2.0, 5.9)

SPECTRUM_RTOL = 1e-9
TRACE_IDENTITY_RTOL = 1e-9
FACTORIZATION_RTOL = 1e-9
NEWTON_RTOL = 1e-12
GAMMA_M_RTOL = 1e-9
ORACLE_RTOL = 1e-11
HADAMARD_ULPS = 16.0
DEGENERATE_FRACTION = 0.1
MIN_DELTA = 1e-8


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, name, residual, tolerance):
        residual = float(residual)
        tolerance = float(tolerance)
        return cls(name, residual, tolerance, bool(residual <= tolerance))


@dataclass
class VerifyReport:
    spec_descriptor: str
    seed: int
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "spec_descriptor": self.spec_descriptor,
            "seed": self.seed,
            "checks": [asdict(c) for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        # repr() of a Python float round-trips exactly (17 significant digits at most)
        return json.dumps(self.to_dict(), indent=1)

    def write(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def from_dict(cls, d):
        report = cls(d["spec_descriptor"], int(d["seed"]),
                     [Check(**c) for c in d["checks"]])
        if report.overall != d["overall"]:
            raise ValueError("report 'overall' flag disagrees with its checks")
        return report

    @classmethod
    def read(cls, path):
        return cls.from_dict(json.loads(Path(path).read_text()))


def random_spec(rng, n, degenerate=False) -> TrigSpec:
    """Random spec: ``x`` uniform on ``[0, 2 pi)``, ``l`` and ``h`` standard normal.

    With ``degenerate=True`` the spec has ``h = l`` (rank-one ``L``).
    Near-zero ``l`` or ``h`` are redrawn.
    """
    while True:
        x = rng.uniform(0.0, 2.0 * math.pi, n)
        l = rng.standard_normal(n)
        h = l.copy() if degenerate else rng.standard_normal(n)
        if gamma_delta(l, h).delta >= MIN_DELTA:
            return TrigSpec(x, l, h)


def random_orthogonal(rng, dim) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


def spectrum_residual(oracle_values, predicted_values) -> float:
    """Max-abs gap between two descending spectra of equal length."""
    a = np.sort(np.asarray(oracle_values))[::-1]
    b = np.sort(np.asarray(predicted_values))[::-1]
    return float(np.max(np.abs(a - b)))


def _oracle_checks(prefix, M, values):
    tr = float(np.trace(M))
    fro2 = float(np.sum(M * M))
    scale = max(abs(tr), math.sqrt(fro2), 1e-300)
    return [
        Check.compare(f"{prefix}oracle_trace", abs(values.sum() - tr) / scale, ORACLE_RTOL),
        Check.compare(f"{prefix}oracle_frobenius",
                      abs(np.sum(values * values) - fro2) / max(fro2, 1e-300), ORACLE_RTOL),
    ]


def spec_checks(spec: TrigSpec, prefix: str = "", generic: bool = True):
    """All per-spec checks: spectrum, traces, quartic, ranks, decomposition."""
    checks = []
    P = build_P(spec)
    L = build_L(spec.l, spec.h)
    summary = eigs_of_P(spec)
    gd = summary.gd
    rho = max(gd.spectral_radius, 1e-300)
    eig = jacobi_eigs(P)

    checks.append(Check.compare(
        f"{prefix}closed_form_spectrum",
        spectrum_residual(eig.values, summary.eigenvalues()),
        SPECTRUM_RTOL * max(1.0, rho)))
    nonzero = numerical_rank(eig.values, P.shape[0])
    checks.append(Check.compare(
        f"{prefix}nonzero_count", abs(nonzero - summary.predicted_rank), 0))
    checks.extend(_oracle_checks(prefix, P, eig.values))

    tp = power_traces(P)
    tl = power_traces(L)
    for m in range(4):
        checks.append(Check.compare(
            f"{prefix}trace_identity_m{m + 1}", abs(tp[m] - 2.0 * tl[m]),
            TRACE_IDENTITY_RTOL * (1.0 + 2.0 * abs(tl[m]))))

    closed = gamma_m_closed(gd)
    checks.append(Check.compare(
        f"{prefix}gamma_m_closed",
        max(abs(closed[m] - 2.0 * tl[m]) / rho ** (m + 1) for m in range(4)),
        GAMMA_M_RTOL))

    phi = newton_phis(tp)
    grid = np.linspace(-2.0 * rho, 2.0 * rho, 11)
    checks.append(Check.compare(
        f"{prefix}quartic_factorization", factorization_check(gd, phi, grid),
        FACTORIZATION_RTOL * (2.0 * rho) ** 4))

    checks.append(Check.compare(
        f"{prefix}newton_closed",
        max(abs(a - b) / rho ** (m + 1)
            for m, (a, b) in enumerate(zip(newton_phis(closed), phis_closed(gd)))),
        NEWTON_RTOL))

    checks.append(Check.compare(
        f"{prefix}hadamard_kron", hadamard_kron_check(spec),
        HADAMARD_ULPS * EPS * float(np.max(np.abs(P)))))

    ranks = rank_bound_check(spec)
    checks.append(Check.compare(f"{prefix}rank_Phat", abs(ranks.rank_Phat - 2), 0))
    checks.append(Check.compare(f"{prefix}rank_bound", 0 if ranks.bound_holds else 1, 0))
    if generic:
        checks.append(Check.compare(
            f"{prefix}rank_equality", 0 if ranks.equality_holds else 1, 0))
    return checks


def fir_checks(n: int, omegas=FIR_OMEGAS):
    """Oracle spectrum of the FIR matrix against the frequency-free closed form."""
    lam_plus, lam_minus = fir_closed_form(n)
    expected = np.array([lam_plus] * 2 + [0.0] * (2 * n - 4) + [lam_minus] * 2)
    checks = [Check.compare(f"fir/n={n:03d}/sign_pattern",
                            0 if lam_plus > 0 > lam_minus else 1, 0)]
    for omega in omegas:
        prefix = f"fir/n={n:03d}/omega={omega:.6g}/"
        spec = build_fir((n, omega))
        summary = eigs_of_P(spec)
        checks.append(Check.compare(
            f"{prefix}closed_form_agreement",
            max(abs(summary.lam_plus - lam_plus), abs(summary.lam_minus - lam_minus)),
            SPECTRUM_RTOL * abs(lam_plus)))
        checks.append(Check.compare(
            f"{prefix}multiplicities",
            abs(summary.mult_plus - 2) + abs(summary.mult_minus - 2)
            + abs(summary.zero_count - (2 * n - 4)), 0))
        eig = jacobi_eigs(build_P(spec))
        checks.append(Check.compare(
            f"{prefix}oracle_spectrum", spectrum_residual(eig.values, expected),
            SPECTRUM_RTOL * abs(lam_plus)))
    return checks


def _structure_checks(rng, prefix, nmax):
    """Rank of ``Z`` for a random full-rank ``U``, and Jacobi under a random rotation."""
    checks = []
    r = int(rng.integers(1, 4))
    n = int(rng.integers(2 * r, max(2 * r, nmax) + 1))
    U = rng.standard_normal((n, 2 * r))
    zb = build_Z(U)
    checks.append(Check.compare(f"{prefix}rank_Z", abs(matrix_rank(zb.Z) - 2 * r), 0))
    checks.append(Check.compare(
        f"{prefix}Z_B_antisymmetry", float(np.max(np.abs(zb.B + zb.B.T))), 0.0))

    dim = int(rng.integers(2, 41))
    X = rng.standard_normal((dim, dim))
    M = X + X.T
    Q = random_orthogonal(rng, dim)
    R = Q.T @ M @ Q
    R = np.triu(R) + np.triu(R, 1).T
    a = jacobi_eigs(M).values
    b = jacobi_eigs(R).values
    scale = max(float(np.max(np.abs(a))), 1e-300)
    checks.append(Check.compare(
        f"{prefix}oracle_rotation_invariance", spectrum_residual(a, b) / scale, 1e-9))
    return checks


def run_suite(trials: int, nmax: int, seed: int, fir_omegas=FIR_OMEGAS) -> VerifyReport:
    """Full property suite over ``trials`` random specs and the FIR family ``n = 2..nmax``."""
    if trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    if nmax < 2:
        raise ValueError(f"nmax must be >= 2, got {nmax}")
    report = VerifyReport(f"verify(trials={trials}, nmax={nmax}, seed={seed})", seed)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        degenerate = bool(rng.random() < DEGENERATE_FRACTION)
        n = int(rng.integers(2, nmax + 1))
        spec = random_spec(rng, n, degenerate=degenerate)
        prefix = f"trial{t:05d}/"
        checks = spec_checks(spec, prefix, generic=not degenerate)
        checks += _structure_checks(rng, prefix, nmax)
        report.checks.extend(sorted(checks, key=lambda c: c.name))
    for n in range(2, nmax + 1):
        report.checks.extend(fir_checks(n, fir_omegas))
    return report
