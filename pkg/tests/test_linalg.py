import numpy as np
import pytest
from numpy.testing import assert_allclose

import bgft
from bgft.errors import DefectiveMatrixError, SingularMatrixError

from conftest import random_digraph


class TestEigGeneral:
    def test_identity(self):
        dec = bgft.eig_general(np.eye(3))
        assert_allclose(dec.eigenvalues, np.ones(3))
        assert dec.cond_v == pytest.approx(1.0)

    def test_swap_matrix(self):
        dec = bgft.eig_general([[0, 1], [1, 0]])
        assert_allclose(dec.eigenvalues, [1, -1], atol=1e-14)

    def test_directed_4cycle_roots_of_unity(self):
        # characteristic polynomial of the cyclic shift is z^4 - 1
        p = bgft.transition(bgft.directed_cycle(4)).p
        dec = bgft.eig_general(p)
        expected = np.array([1, 1j, -1j, -1])
        # match as a multiset: ties in Re are roundoff-sensitive
        for z in expected:
            assert np.min(np.abs(dec.eigenvalues - z)) <= 1e-12
        assert dec.cond_v == pytest.approx(1.0, abs=1e-10)

    def test_ordering_descending_real_then_imag(self):
        dec = bgft.eig_general(random_digraph(16, 3).adjacency)
        lam = dec.eigenvalues
        key = np.lexsort((lam.imag, -lam.real))
        assert np.array_equal(key, np.arange(16))

    def test_unit_columns_and_phase(self):
        dec = bgft.eig_general(random_digraph(12, 5).adjacency)
        v = dec.right_vectors
        assert_allclose(np.linalg.norm(v, axis=0), np.ones(12), atol=1e-12)
        for k in range(12):
            pivot = v[np.argmax(np.abs(v[:, k])), k]
            assert abs(pivot.imag) <= 1e-12
            assert pivot.real > 0

    def test_type_invariants(self):
        m = bgft.transition(random_digraph(20, 7)).p
        dec = bgft.eig_general(m)
        lam, v, u = dec.eigenvalues, dec.right_vectors, dec.left_dual
        assert np.linalg.norm(m @ v - v * lam) <= 1e-10 * max(1, np.linalg.norm(m))
        assert np.linalg.norm(u @ v - np.eye(20)) <= 1e-8

    def test_deterministic_bit_identical(self):
        m = random_digraph(16, 11).adjacency
        d1 = bgft.eig_general(m)
        d2 = bgft.eig_general(m)
        assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
        assert np.array_equal(d1.right_vectors, d2.right_vectors)
        assert np.array_equal(d1.left_dual, d2.left_dual)

    def test_symmetric_real_input(self):
        rng = np.random.default_rng(0)
        m = rng.random((10, 10))
        m = m + m.T
        dec = bgft.eig_general(m)
        assert np.max(np.abs(dec.eigenvalues.imag)) <= 1e-10
        assert dec.cond_v <= 1 + 1e-6

    def test_degenerate_cluster_reorthonormalized(self):
        # even undirected cycle has doubly degenerate eigenvalues
        p = bgft.transition(bgft.undirected_cycle(16)).p
        assert bgft.eig_general(p).cond_v <= 1 + 1e-6

    def test_jordan_block_defective(self):
        with pytest.raises(DefectiveMatrixError):
            bgft.eig_general([[1, 1], [0, 1]])

    def test_reconstruction_property(self):
        for seed in range(5):
            m = bgft.transition(random_digraph(12, 40 + seed)).p
            dec = bgft.eig_general(m)
            rebuilt = (dec.right_vectors * dec.eigenvalues) @ dec.left_dual
            assert np.linalg.norm(m - rebuilt) <= 1e-8 * np.linalg.norm(m)

    def test_size_512(self):
        dec = bgft.eig_general(bgft.transition(bgft.directed_cycle(512)).p)
        assert dec.cond_v == pytest.approx(1.0, abs=1e-6)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            bgft.eig_general([[np.nan, 0], [0, 1]])


class TestSvd:
    def test_identity(self):
        assert_allclose(bgft.svd(np.eye(4)).singular_values, np.ones(4))

    def test_diag(self):
        assert_allclose(bgft.svd(np.diag([3.0, 0.0])).singular_values, [3, 0])

    def test_gram_oracle(self):
        rng = np.random.default_rng(1)
        m = rng.random((5, 3))
        s = bgft.svd(m).singular_values
        gram_eigs = np.linalg.eigvalsh(m.T @ m)[::-1]
        assert_allclose(s, np.sqrt(np.maximum(gram_eigs, 0)), rtol=1e-8)

    def test_reconstruction(self):
        rng = np.random.default_rng(2)
        m = rng.random((6, 4)) + 1j * rng.random((6, 4))
        res = bgft.svd(m, compute_vectors=True)
        rebuilt = (res.u * res.singular_values) @ res.vh
        assert np.linalg.norm(m - rebuilt) <= 1e-8 * np.linalg.norm(m)

    def test_adjoint_has_same_spectrum(self):
        rng = np.random.default_rng(3)
        m = rng.random((7, 5)) + 1j * rng.random((7, 5))
        assert_allclose(
            bgft.svd(m).singular_values,
            bgft.svd(m.conj().T).singular_values,
            atol=1e-10,
        )

    def test_nonincreasing(self):
        s = bgft.svd(np.random.default_rng(4).random((8, 8))).singular_values
        assert np.all(np.diff(s) <= 0)


class TestCondAndNorms:
    def test_cond_identity(self):
        assert bgft.cond2(np.eye(5)) == pytest.approx(1.0)

    def test_cond_diag(self):
        assert bgft.cond2(np.diag([10.0, 1.0])) == pytest.approx(10.0)

    def test_cond_singular_is_inf(self):
        assert bgft.cond2(np.diag([1.0, 0.0])) == float("inf")

    def test_cond_perturbed_basis_matches_table(self):
        g = bgft.add_directed_chord(bgft.directed_cycle(64), 20, 0, 32)
        dec = bgft.eig_general(bgft.transition(g).p)
        assert bgft.cond2(dec.right_vectors) == pytest.approx(
            28.011585066632986, rel=0.01
        )

    def test_spectral_norm(self):
        assert bgft.spectral_norm2(np.diag([2.0, 1.0])) == pytest.approx(2.0)

    def test_frobenius(self):
        assert bgft.frobenius_norm([[3, 4]]) == pytest.approx(5.0)


class TestLstsq:
    def test_identity(self):
        y = np.array([1 + 2j, 3.0, -1j])
        sol = bgft.lstsq(np.eye(3), y)
        assert_allclose(sol.coeffs, y)
        assert not sol.rank_deficient

    def test_overdetermined_consistent(self):
        rng = np.random.default_rng(5)
        b = rng.random((8, 3)) + 1j * rng.random((8, 3))
        c0 = rng.random(3) + 1j * rng.random(3)
        sol = bgft.lstsq(b, b @ c0)
        assert_allclose(sol.coeffs, c0, atol=1e-10)

    def test_normal_equations_oracle(self):
        rng = np.random.default_rng(6)
        b = rng.random((8, 3)) + 1j * rng.random((8, 3))
        y = rng.random(8) + 1j * rng.random(8)
        oracle = np.linalg.solve(b.conj().T @ b, b.conj().T @ y)
        assert_allclose(bgft.lstsq(b, y).coeffs, oracle, atol=1e-8)

    def test_rank_deficient_flagged_min_norm(self):
        b = np.array([[1.0, 1.0], [1.0, 1.0]])
        sol = bgft.lstsq(b, [2.0, 2.0])
        assert sol.rank_deficient
        assert sol.rank == 1
        assert_allclose(sol.coeffs, [1.0, 1.0], atol=1e-12)  # min-norm solution


class TestInverse:
    def test_identity(self):
        assert_allclose(bgft.inverse(np.eye(4)), np.eye(4))

    def test_residual_oracle(self):
        rng = np.random.default_rng(7)
        m = rng.random((6, 6)) + np.eye(6)  # well-conditioned
        inv = bgft.inverse(m)
        assert np.linalg.norm(m @ inv - np.eye(6)) <= 1e-8

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            bgft.inverse(np.diag([1.0, 0.0]))


class TestPlumbing:
    def test_matmul_matvec(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert_allclose(bgft.matmul(a, np.eye(2)), a)
        assert_allclose(bgft.matvec(a, [1.0, 1.0]), [3.0, 7.0])
