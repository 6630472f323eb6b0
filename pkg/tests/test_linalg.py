"""Unit tests for the dense complex matrix routines."""

from fractions import Fraction

import numpy as np
import pytest

from xsep import criteria, linalg, xstate
from xsep.bipartite import partial_transpose
from xsep.errors import DimensionMismatch, NotHermitian

from conftest import random_complex, random_hermitian, random_x_matrix, x_spectrum_oracle


def naive_mul(a, b):
    d = a.shape[0]
    out = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            acc = 0j
            for k in range(d):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


class TestMul:
    def test_identity(self):
        eye = np.eye(4, dtype=complex)
        assert np.array_equal(linalg.mul(eye, eye), eye)

    def test_matches_naive_loop(self, rng):
        for _ in range(25):
            a = random_complex(rng, 4)
            b = random_complex(rng, 4)
            assert np.max(np.abs(linalg.mul(a, b) - naive_mul(a, b))) < 1e-14

    def test_factor_product_is_x_shaped(self):
        params = xstate.XParams(0.3, 0.2, 0.25, 0.35, 0.5, 0.4j)
        pair = xstate.build_factors(params)
        prod = linalg.mul(pair.p1, pair.p2)
        assert prod[0, 3] == params.t1 * params.v1
        assert prod[1, 2] == params.t2 * params.v2
        assert prod[2, 1] == params.t3 * np.conj(params.v2)
        assert prod[3, 0] == params.t4 * np.conj(params.v1)
        assert xstate.is_x_shaped(prod, 0.0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            linalg.mul(np.eye(4, dtype=complex), np.eye(3, dtype=complex))


class TestDaggerTranspose:
    def test_dagger_identity(self):
        eye = np.eye(4, dtype=complex)
        assert np.array_equal(linalg.dagger(eye), eye)

    def test_symmetric_product_is_hermitian(self):
        pair = xstate.build_factors(xstate.XParams.symmetric(0.3, 0.2, 0.5, 0.4j))
        prod = linalg.mul(pair.p1, pair.p2)
        assert np.array_equal(linalg.dagger(prod), prod)

    def test_dagger_involution(self, rng):
        a = random_complex(rng, 5)
        assert np.array_equal(linalg.dagger(linalg.dagger(a)), a)

    def test_transpose_diagonal_fixed(self):
        d = np.diag(np.array([1.0, 2.0, 3.0], dtype=complex))
        assert np.array_equal(linalg.transpose(d), d)

    def test_transpose_of_product(self, rng):
        for _ in range(20):
            a = random_complex(rng, 4)
            b = random_complex(rng, 4)
            lhs = linalg.transpose(linalg.mul(a, b))
            rhs = linalg.mul(linalg.transpose(b), linalg.transpose(a))
            assert linalg.frobenius_norm(lhs - rhs) < 1e-13

    def test_transpose_involution(self, rng):
        a = random_complex(rng, 4)
        assert np.array_equal(linalg.transpose(linalg.transpose(a)), a)


class TestTrace:
    def test_identity(self):
        assert linalg.trace(np.eye(4, dtype=complex)) == 4

    def test_counterexample_trace_is_one(self):
        # exact rational oracle: 52/468 + 117/468 + 92/468 + 207/468 == 1
        exact = (
            Fraction(1, 9) + Fraction(1, 4) + Fraction(23, 117) + Fraction(23, 52)
        )
        assert exact == 1
        rho = criteria.counterexample_state()
        assert abs(linalg.trace(rho) - 1.0) < 1e-15

    def test_invariant_under_partial_transpose(self, rng):
        for _ in range(10):
            a = random_complex(rng, 4)
            assert linalg.trace(partial_transpose(a, (2, 2))) == linalg.trace(a)


class TestDet:
    def test_identity(self):
        assert linalg.det(np.eye(4, dtype=complex)) == 1

    def test_diagonal(self):
        assert abs(linalg.det(np.diag(np.array([0.3, 0.2, 0.5, 0.7], dtype=complex)))
                   - 0.3 * 0.2 * 0.5 * 0.7) < 1e-15

    def test_x_matrix_closed_form(self, rng):
        # block factorization oracle: det = (d11*d44 - |c14|^2)(d22*d33 - |c23|^2)
        for _ in range(50):
            m = random_x_matrix(rng)
            expected = (
                (m[0, 0].real * m[3, 3].real - abs(m[0, 3]) ** 2)
                * (m[1, 1].real * m[2, 2].real - abs(m[1, 2]) ** 2)
            )
            assert abs(linalg.det(m) - expected) < 1e-12

    def test_singular_returns_zero(self):
        m = np.zeros((3, 3), dtype=complex)
        m[0, 0] = 1.0
        assert linalg.det(m) == 0

    def test_hermitian_det_is_real(self, rng):
        for _ in range(20):
            h = random_hermitian(rng, 4)
            assert abs(linalg.det(h).imag) < 1e-12

    def test_against_numpy(self, rng):
        for d in (2, 3, 4, 9):
            a = random_complex(rng, d)
            assert abs(linalg.det(a) - np.linalg.det(a)) < 1e-10 * max(
                1.0, abs(np.linalg.det(a))
            )


class TestFrobenius:
    def test_identity(self):
        assert linalg.frobenius_norm(np.eye(4, dtype=complex)) == 2.0

    def test_zero(self):
        assert linalg.frobenius_norm(np.zeros((4, 4), dtype=complex)) == 0.0

    def test_trace_identity(self, rng):
        for _ in range(20):
            a = random_complex(rng, 4)
            via_trace = linalg.trace(linalg.mul(linalg.dagger(a), a)).real
            assert abs(linalg.frobenius_norm(a) ** 2 - via_trace) < 1e-12 * max(1.0, via_trace)


class TestHermitianEigenvalues:
    def test_p2_spectrum_golden(self):
        pair = xstate.build_factors(xstate.XParams(1, 1, 1, 1, 0.5, 0.3))
        w = linalg.hermitian_eigenvalues(pair.p2)
        assert np.max(np.abs(w - np.array([1.5, 1.3, 0.7, 0.5]))) < 1e-13

    def test_diagonal(self):
        w = linalg.hermitian_eigenvalues(np.diag(np.array([0.3, 0.2, 0.5, 0.1], dtype=complex)))
        assert np.array_equal(w, np.array([0.5, 0.3, 0.2, 0.1]))

    def test_symmetric_product_full_spectrum(self):
        # the two smallest values t1(1-|v1|) = 0.15 and t2(1-|v2|) = 0.12 sit
        # inside the full four-value set {t1(1 +- |v1|), t2(1 +- |v2|)}
        params = xstate.XParams.symmetric(0.3, 0.2, 0.5, 0.4)
        pair = xstate.build_factors(params)
        prod = linalg.mul(pair.p1, pair.p2)
        w = linalg.hermitian_eigenvalues(prod)
        expected = np.sort(np.array([0.45, 0.15, 0.28, 0.12]))[::-1]
        assert np.max(np.abs(w - expected)) < 1e-13
        assert any(abs(v - 0.15) < 1e-13 for v in w)
        assert any(abs(v - 0.12) < 1e-13 for v in w)

    def test_non_hermitian_raises_with_pair(self):
        m = np.eye(4, dtype=complex)
        m[0, 2] = 0.5
        with pytest.raises(NotHermitian) as err:
            linalg.hermitian_eigenvalues(m)
        assert err.value.pair == (0, 2)
        assert "(0,2)" in str(err.value)

    def test_degenerate_multiplicity(self):
        w = linalg.hermitian_eigenvalues(np.eye(4, dtype=complex) * 0.25)
        assert np.array_equal(w, np.full(4, 0.25))

    def test_against_numpy(self, rng):
        for d in (2, 3, 5, 9, 16):
            for _ in range(10):
                h = random_hermitian(rng, d)
                w = linalg.hermitian_eigenvalues(h)
                ref = np.sort(np.linalg.eigvalsh(h))[::-1]
                assert np.max(np.abs(w - ref)) < 1e-10

    def test_jacobi_vs_x_block_closed_form(self, rng):
        for _ in range(10_000):
            m = random_x_matrix(rng)
            w = linalg.hermitian_eigenvalues(m)
            assert np.max(np.abs(w - x_spectrum_oracle(m))) < 1e-10

    def test_eigenvalue_sum_is_trace(self, rng):
        for d in (4, 9):
            for _ in range(20):
                h = random_hermitian(rng, d)
                w = linalg.hermitian_eigenvalues(h)
                assert abs(np.sum(w) - linalg.trace(h).real) < 1e-10 * d

    def test_eigenvalue_product_is_det(self, rng):
        for _ in range(20):
            # shift to keep the matrix well conditioned
            h = random_hermitian(rng, 4) + 10.0 * np.eye(4)
            w = linalg.hermitian_eigenvalues(h)
            d = linalg.det(h).real
            assert abs(np.prod(w) - d) < 1e-9 * abs(d)

    def test_frobenius_sq_is_eigenvalue_sq_sum(self, rng):
        for _ in range(20):
            h = random_hermitian(rng, 4)
            w = linalg.hermitian_eigenvalues(h)
            f2 = linalg.frobenius_norm(h) ** 2
            assert abs(f2 - np.sum(w ** 2)) < 1e-10 * max(1.0, f2)


class TestMinEigenvalue:
    def test_bell_partial_transpose(self):
        bell = np.zeros((4, 4), dtype=complex)
        bell[0, 0] = bell[0, 3] = bell[3, 0] = bell[3, 3] = 0.5
        assert abs(linalg.min_eigenvalue(partial_transpose(bell, (2, 2))) + 0.5) < 1e-13

    def test_maximally_mixed(self):
        assert abs(linalg.min_eigenvalue(np.eye(4, dtype=complex) / 4.0) - 0.25) < 1e-15

    def test_pt_product_closed_form(self):
        params = xstate.XParams.symmetric(0.3, 0.2, 0.5, 0.4)
        pair = xstate.build_factors(params)
        pt_prod = partial_transpose(linalg.mul(pair.p1, pair.p2), (2, 2))
        expected = min(0.3 + 0.2 * 0.4, 0.3 - 0.2 * 0.4, 0.2 + 0.3 * 0.5, 0.2 - 0.3 * 0.5)
        assert abs(linalg.min_eigenvalue(pt_prod) - expected) < 1e-13


class TestIsPsd:
    def test_amplitude_above_one_is_not_psd(self):
        m = np.eye(4, dtype=complex)
        m[0, 3] = 1.2
        m[3, 0] = 1.2
        assert not linalg.is_psd(m)

    def test_nonnegative_diagonal(self):
        assert linalg.is_psd(np.diag(np.array([0.0, 0.1, 2.0, 3.0], dtype=complex)))

    def test_non_hermitian_is_false(self):
        m = np.eye(4, dtype=complex)
        m[0, 1] = 1.0
        assert not linalg.is_psd(m)

    def test_counterexample_is_psd(self):
        # both block discriminants vanish exactly in rationals
        assert Fraction(1, 4) * Fraction(23, 117) == Fraction(23, 468)
        assert Fraction(1, 9) * Fraction(23, 52) == Fraction(23, 468)
        # |c1|^2 = (1 + 22) / (4 * 117), |f1|^2 = (1 + 22) / (36 * 13)
        assert Fraction(23, 4 * 117) == Fraction(23, 468)
        assert Fraction(23, 36 * 13) == Fraction(23, 468)
        assert linalg.is_psd(criteria.counterexample_state())
