import numpy as np
import pytest
from hypothesis import given, strategies as st

from trigeig import (ConvergenceError, DimensionError, DomainError, build_fir, build_P,
                     build_Z, fir_closed_form, jacobi_eigs, mat_mul, numerical_rank, trace)
from trigeig.verify import random_orthogonal


class TestJacobi:
    def test_diagonal(self):
        r = jacobi_eigs(np.diag([3.0, 1.0, 2.0]))
        np.testing.assert_array_equal(r.values, [3, 2, 1])
        assert r.sweeps_used == 0

    def test_swap(self):
        np.testing.assert_allclose(jacobi_eigs([[0.0, 1.0], [1.0, 0.0]]).values, [1, -1],
                                   atol=1e-15)

    def test_fir_n3(self):
        lp, lm = 3.4364916731037085, -0.4364916731037085
        r = jacobi_eigs(build_P(build_fir((3, 0.9))))
        np.testing.assert_allclose(r.values, [lp, lp, 0, 0, lm, lm], atol=1e-9)

    def test_zero_matrix(self):
        r = jacobi_eigs(np.zeros((4, 4)))
        np.testing.assert_array_equal(r.values, 0)

    def test_non_convergence(self, rng):
        X = rng.standard_normal((20, 20))
        with pytest.raises(ConvergenceError) as info:
            jacobi_eigs(X + X.T, max_sweeps=1)
        assert info.value.off_diag_norm > 0
        assert info.value.sweeps_used == 1

    def test_rejects_asymmetric(self):
        with pytest.raises(DomainError):
            jacobi_eigs([[1.0, 2.0], [0.0, 1.0]])

    def test_rejects_bad_arguments(self):
        with pytest.raises(DimensionError):
            jacobi_eigs(np.ones((2, 3)))
        with pytest.raises(DomainError):
            jacobi_eigs(np.eye(2), threshold=0)
        with pytest.raises(DomainError):
            jacobi_eigs(np.eye(2), max_sweeps=0)

    def test_deterministic(self, rng):
        X = rng.standard_normal((15, 15))
        a = jacobi_eigs(X + X.T).values
        b = jacobi_eigs(X + X.T).values
        assert a.tobytes() == b.tobytes()

    def test_input_not_modified(self, rng):
        X = rng.standard_normal((6, 6))
        M = X + X.T
        copy = M.copy()
        jacobi_eigs(M)
        np.testing.assert_array_equal(M, copy)

    @given(seed=st.integers(0, 2**32 - 1), dim=st.integers(1, 30))
    def test_spectrum_preservation(self, seed, dim):
        X = np.random.default_rng(seed).standard_normal((dim, dim))
        M = X + X.T
        r = jacobi_eigs(M)
        fro2 = np.sum(M * M)
        assert np.all(np.diff(r.values) <= 0)
        assert abs(r.values.sum() - np.trace(M)) <= 1e-11 * max(abs(np.trace(M)), np.sqrt(fro2))
        assert abs(np.sum(r.values**2) - fro2) <= 1e-11 * fro2
        assert r.off_diag_norm <= 1e-12 * np.sqrt(fro2)
        np.testing.assert_allclose(r.values, np.sort(np.linalg.eigvalsh(M))[::-1],
                                   atol=1e-11 * np.sqrt(fro2))

    @given(seed=st.integers(0, 2**32 - 1), dim=st.integers(2, 40))
    def test_rotation_invariance(self, seed, dim):
        rng = np.random.default_rng(seed)
        X = rng.standard_normal((dim, dim))
        M = X + X.T
        Q = random_orthogonal(rng, dim)
        R = Q.T @ M @ Q
        R = np.triu(R) + np.triu(R, 1).T
        a, b = jacobi_eigs(M).values, jacobi_eigs(R).values
        np.testing.assert_allclose(a, b, atol=1e-9 * np.max(np.abs(a)))


class TestNumericalRank:
    def test_full(self):
        assert numerical_rank([3, 2, 1], 3, 1e-12) == 3

    def test_tiny_dropped(self):
        assert numerical_rank([5, 1e-15, 0], 3, 1e-12) == 1

    def test_fir_n4(self):
        P = build_P(build_fir((4, 0.8)))
        assert numerical_rank(jacobi_eigs(P).values, 8) == 4

    def test_empty(self):
        assert numerical_rank([], 0) == 0

    def test_fir_large_n(self):
        n = 40
        lp, _ = fir_closed_form(n)
        vals = jacobi_eigs(build_P(build_fir((n, 1.1)))).values
        assert numerical_rank(vals, 2 * n) == 4
        assert np.sum(np.abs(vals - lp) <= 1e-9 * lp) == 2


class TestProducts:
    def test_identity(self, rng):
        M = rng.standard_normal((4, 4))
        np.testing.assert_array_equal(mat_mul(np.eye(4), M), M)

    def test_trace(self):
        assert trace([[1, 2], [3, 4]]) == 5

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            mat_mul(np.ones((2, 3)), np.ones((2, 3)))
        with pytest.raises(DimensionError):
            trace(np.ones((2, 3)))

    def test_block_product_loop_recompute(self, rng):
        U = rng.standard_normal((5, 2))
        zb = build_Z(U)
        got = mat_mul(zb.A, zb.B)
        n = 5
        for i in range(n):
            for j in range(n):
                s = 0.0
                for k in range(n):
                    s += zb.A[i, k] * zb.B[k, j]
                assert got[i, j] == pytest.approx(s, abs=1e-12)

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 12))
    def test_square_block_identity(self, seed, n):
        from conftest import generic_spec
        from trigeig import build_blocks
        spec = generic_spec(np.random.default_rng(seed), n)
        P = build_P(spec)
        A, B = build_blocks(spec)
        P2 = mat_mul(P, P)
        scale = np.max(np.abs(P)) ** 2 * n
        np.testing.assert_allclose(P2[:n, :n], mat_mul(A, A) + mat_mul(B, B.T), atol=1e-13 * scale)
        np.testing.assert_allclose(P2[:n, n:], mat_mul(A, B) + mat_mul(B, A), atol=1e-13 * scale)
