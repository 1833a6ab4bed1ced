import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from trigeig import (DimensionError, DomainError, TrigSpec, build_L2r, build_pure,
                     build_symplectic, build_Z, matrix_rank, rank_bound_check, trig_U)

from conftest import generic_spec


class TestSymplectic:
    def test_r1(self):
        np.testing.assert_array_equal(build_symplectic(1).J, [[0, 1], [-1, 0]])

    def test_r2(self):
        J = build_symplectic(2).J
        np.testing.assert_array_equal(J[:2, 2:], np.eye(2))
        np.testing.assert_array_equal(J[2:, :2], -np.eye(2))
        np.testing.assert_array_equal(J[:2, :2], 0)

    @pytest.mark.parametrize("r", [1, 2, 3, 5])
    def test_square_is_minus_identity(self, r):
        J = build_symplectic(r).J
        np.testing.assert_array_equal(J @ J, -np.eye(2 * r))

    def test_domain(self):
        with pytest.raises(DomainError):
            build_symplectic(0)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_middle_factor_rank(self, r):
        assert matrix_rank(build_L2r(r)) == 2 * r


class TestBuildZ:
    def test_identity_factor(self):
        zb = build_Z(np.eye(2))
        np.testing.assert_array_equal(zb.A, np.eye(2))
        np.testing.assert_array_equal(zb.B, [[0, 1], [-1, 0]])
        expected = [[1, 0, 0, 1], [0, 1, -1, 0], [0, -1, 1, 0], [1, 0, 0, 1]]
        np.testing.assert_array_equal(zb.Z, expected)
        # row reduction: rows 3 and 4 repeat rows 2 and 1 up to sign
        assert np.linalg.matrix_rank(np.array(expected, dtype=float)) == 2
        assert matrix_rank(zb.Z) == 2

    def test_reproduces_pure_matrix(self):
        x = [0.2, 1.0, 2.2]
        np.testing.assert_allclose(build_Z(trig_U(x)).Z, build_pure(x)[2], atol=1e-15)

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            build_Z(np.ones((3, 3)))
        with pytest.raises(DimensionError):
            build_Z(np.ones((2, 4)))

    @given(seed=st.integers(0, 2**32 - 1), r=st.integers(1, 3), extra=st.integers(0, 14))
    def test_rank_equals_2r(self, seed, r, extra):
        rng = np.random.default_rng(seed)
        U = rng.standard_normal((2 * r + extra, 2 * r))
        zb = build_Z(U)
        assert matrix_rank(zb.Z) == 2 * r == matrix_rank(zb.A)
        np.testing.assert_array_equal(zb.B + zb.B.T, 0)


class TestTrigU:
    def test_quarter_turn(self):
        np.testing.assert_allclose(trig_U([0, math.pi / 2]), [[1, 0], [0, -1]], atol=1e-16)

    def test_half_turn_is_rank_one(self):
        U = trig_U([0, math.pi])
        np.testing.assert_allclose(U, [[1, 0], [-1, 0]], atol=1e-15)
        assert np.linalg.matrix_rank(U, tol=1e-12) == 1

    def test_gram_matches_cosine_block(self):
        x = [0.3, 1.1, 2.0]
        U = trig_U(x)
        np.testing.assert_allclose(U @ U.T, build_pure(x)[0], atol=1e-15)


class TestRankBound:
    def test_generic(self, rng):
        r = rank_bound_check(generic_spec(rng, 6))
        assert (r.rank_P, r.rank_Phat, r.rank_L, r.bound_holds, r.equality_holds) == \
            (4, 2, 2, True, True)

    def test_rank_one_L(self, rng):
        l = rng.standard_normal(5)
        r = rank_bound_check(TrigSpec(rng.uniform(0, 6, 5), l, l))
        assert (r.rank_P, r.rank_Phat, r.rank_L, r.bound_holds, r.equality_holds) == \
            (2, 2, 1, True, True)

    def test_zero_phases(self, rng):
        # Phat = diag(ee^T, ee^T): the factor U has rank one, yet rank(Phat) is still 2
        r = rank_bound_check(TrigSpec(np.zeros(5), rng.standard_normal(5), rng.standard_normal(5)))
        assert (r.rank_P, r.rank_Phat, r.rank_L) == (4, 2, 2)
        assert r.bound_holds and r.equality_holds

    def test_collinear_phases(self, rng):
        x = np.array([0.4, 0.4 + math.pi, 0.4, 0.4 + 2 * math.pi])
        r = rank_bound_check(TrigSpec(x, rng.standard_normal(4), rng.standard_normal(4)))
        assert r.rank_Phat == 2
        assert r.bound_holds and r.equality_holds

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 12))
    def test_pure_matrix_rank_two(self, seed, n):
        x = np.random.default_rng(seed).uniform(0, 2 * math.pi, n)
        assert matrix_rank(build_pure(x)[2]) == 2
