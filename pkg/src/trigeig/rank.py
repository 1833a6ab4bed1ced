"""Rank structure of block matrices ``[[U U^T, U J U^T], [., U U^T]]``.

``J`` is the symplectic identity ``[[0, I_r], [-I_r, 0]]``. For ``U`` of
full column rank ``2r`` the block matrix ``Z`` has rank ``2r``; with
``U[i] = (cos x_i, -sin x_i)`` it reproduces the pure trigonometric
matrix, which therefore has rank 2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._util import as_vector, freeze, mirror_upper
from .core import TrigSpec, build_L, build_P, build_pure
from .errors import DimensionError, DomainError
from .oracle import jacobi_eigs, numerical_rank

__all__ = [
    "SymplecticBlock",
    "ZBlocks",
    "RankReport",
    "build_symplectic",
    "build_L2r",
    "build_Z",
    "trig_U",
    "matrix_rank",
    "rank_bound_check",
]

RANK_TOL_SCALE = 1e-12


@dataclass(frozen=True)
class SymplecticBlock:
    r: int
    J: np.ndarray


@dataclass(frozen=True)
class ZBlocks:
    U: np.ndarray
    A: np.ndarray
    B: np.ndarray
    Z: np.ndarray


@dataclass(frozen=True)
class RankReport:
    rank_P: int
    rank_Phat: int
    rank_L: int
    bound_holds: bool
    equality_holds: bool


def build_symplectic(r: int) -> SymplecticBlock:
    if int(r) != r or r < 1:
        raise DomainError(f"r must be an integer >= 1, got {r}")
    r = int(r)
    I = np.eye(r)
    O = np.zeros((r, r))
    return SymplecticBlock(r, freeze(np.block([[O, I], [-I, O]])))


def build_L2r(r: int) -> np.ndarray:
    """The ``4r x 4r`` middle factor ``[[I, J], [-J, I]]`` of ``Z``."""
    J = build_symplectic(r).J
    I = np.eye(2 * r)
    return freeze(np.block([[I, J], [-J, I]]))


def build_Z(U) -> ZBlocks:
    """Assemble ``Z = [[A, B], [B^T, A]]`` with ``A = U U^T`` and ``B = U J U^T``."""
    U = np.array(U, dtype=np.float64)
    if U.ndim != 2 or U.shape[1] % 2 or U.shape[1] == 0:
        raise DimensionError(f"U must be n x 2r, got shape {U.shape}")
    n, two_r = U.shape
    if n < two_r:
        raise DimensionError(f"need n >= 2r, got n={n}, 2r={two_r}")
    if not np.all(np.isfinite(U)):
        raise DomainError("U has non-finite entries")
    J = build_symplectic(two_r // 2).J
    A = mirror_upper(U @ U.T)
    upper = np.triu(U @ J @ U.T, 1)
    B = upper - upper.T
    Z = np.block([[A, B], [B.T, A]])
    return ZBlocks(freeze(U), freeze(A), freeze(B), freeze(Z))


def trig_U(x) -> np.ndarray:
    """``n x 2`` factor with rows ``(cos x_i, -sin x_i)``.

    ``U U^T`` gives ``cos(x_i - x_j)`` and ``U J U^T`` gives
    ``sin(x_i - x_j)``; the minus sign on the second column fixes the
    orientation of the sine block.
    """
    x = as_vector(x, "x")
    if len(x) < 2:
        raise DimensionError(f"need n >= 2, got n={len(x)}")
    return freeze(np.column_stack([np.cos(x), -np.sin(x)]))


def matrix_rank(M, tol_scale: float = RANK_TOL_SCALE) -> int:
    """Numerical rank of a symmetric matrix from its Jacobi eigenvalues."""
    M = np.asarray(M)
    return numerical_rank(jacobi_eigs(M).values, M.shape[0], tol_scale)


def rank_bound_check(spec: TrigSpec, tol: float = RANK_TOL_SCALE) -> RankReport:
    """Measured ranks of ``P``, ``Phat`` and ``L``.

    ``bound_holds`` is ``rank(P) <= 2 rank(Phat)``; ``equality_holds`` is
    ``rank(P) == rank(L) rank(Phat)``.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    rank_P = matrix_rank(build_P(spec), tol)
    rank_Phat = matrix_rank(build_pure(spec.x)[2], tol)
    rank_L = matrix_rank(build_L(spec.l, spec.h), tol)
    return RankReport(
        rank_P=rank_P,
        rank_Phat=rank_Phat,
        rank_L=rank_L,
        bound_holds=rank_P <= 2 * rank_Phat,
        equality_holds=rank_P == rank_L * rank_Phat,
    )
