"""Generalized trigonometric matrices, their closed-form spectra, and numerical checks."""
from .core import (FirParams, TrigSpec, build_blocks, build_fir, build_L, build_P,
                   build_pure, format_matrix_csv, hadamard_kron_check, read_matrix_csv, read_vector,
                   write_matrix_csv)
from .errors import ConvergenceError, DimensionError, DomainError
from .oracle import EigResult, jacobi_eigs, mat_mul, numerical_rank, trace
from .rank import (RankReport, SymplecticBlock, ZBlocks, build_L2r, build_symplectic,
                   build_Z, matrix_rank, rank_bound_check, trig_U)
from .spectral import (GammaDelta, SpectralSummary, classify_rank_L, eigs_of_L, eigs_of_P,
                       fir_closed_form, gamma_delta)
from .symfun import (SymFunReport, factorization_check, gamma_m_closed, newton_phis,
                     phis_closed, power_traces, quartic_coeffs, quartic_eval,
                     symfun_report, trace_identity_residuals)

__version__ = "0.1.0"
