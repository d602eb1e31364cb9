"""Tests for dense complex linear algebra and the scalar solvers."""

import math

import numpy as np
import pytest
from hypothesis import example, given, strategies as st

from bohrkit.core.errors import ConvergenceError, DimensionError, ValidationError
from bohrkit.modules.numerics import (
    Bracket,
    ComplexMatrix,
    bisect_root,
    golden_section,
    matrix_arithmetic,
    minimize_1d,
    operator_norm,
    operator_norms,
)
from strategies import dims, random_matrix, random_unitary, seeds


GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


class TestOperatorNormOracles:
    """Closed-form operator norms."""

    @pytest.mark.parametrize("dim", [1, 2, 5])
    def test_identity(self, dim):
        assert operator_norm(ComplexMatrix.identity(dim)) == pytest.approx(1.0, abs=1e-10)

    def test_rank_one(self):
        u = np.array([1.0, 2.0, 2.0])
        v = np.array([3.0, 0.0, 4.0j])
        A = ComplexMatrix(np.outer(u, v.conj()))
        assert operator_norm(A) == pytest.approx(15.0, abs=1e-10)

    def test_jordan_block_gives_golden_ratio(self):
        A = ComplexMatrix.from_rows([[1, 1], [0, 1]])
        assert operator_norm(A) == pytest.approx(GOLDEN_RATIO, abs=1e-10)

    def test_zero_matrix(self):
        assert operator_norm(ComplexMatrix.zeros(3)) == 0.0

    def test_start_vector_orthogonal_to_top_direction(self):
        # all-ones start lies in the kernel of the dominant part
        A = ComplexMatrix(np.diag([0.0, 0.0, 0.0]) + np.outer([1, -1, 0], [1, -1, 0]) * 2.0)
        assert operator_norm(A) == pytest.approx(4.0, abs=1e-10)

    @pytest.mark.parametrize("magnitude", [1e-170, 1e-300, 1e150])
    def test_extreme_magnitudes_keep_relative_accuracy(self, magnitude):
        A = ComplexMatrix(magnitude * np.array([[1.0, 2.0], [0.0, 1.0]]))
        assert operator_norm(A) == pytest.approx(magnitude * (1 + math.sqrt(2)), rel=1e-9)

    def test_subnormal_entries(self):
        A = ComplexMatrix(np.diag([3e-315, 1e-320]))
        assert operator_norm(A) == pytest.approx(3e-315, rel=1e-6)

    def test_batched_mixes_zero_and_tiny(self):
        stack = np.stack([np.zeros((2, 2)), 1e-200 * np.eye(2), np.eye(2)])
        np.testing.assert_allclose(operator_norms(stack), [0.0, 1e-200, 1.0], rtol=1e-10, atol=0.0)

    def test_iteration_cap_raises(self):
        A = ComplexMatrix(np.diag([1.0, 0.99]))
        with pytest.raises(ConvergenceError) as excinfo:
            operator_norm(A, tol=1e-15, max_iter=2)
        assert excinfo.value.iterations == 2

    def test_rejects_nonpositive_tol(self):
        with pytest.raises(ValidationError):
            operator_norm(ComplexMatrix.identity(2), tol=0.0)


class TestOperatorNormProperties:
    """Invariants of ‖·‖ on random matrices."""

    def test_unitary_invariance_over_seeded_pairs(self):
        for seed in range(1000):
            A = random_matrix(seed, 3)
            U, V = random_unitary(seed + 10_000, 3), random_unitary(seed + 20_000, 3)
            stack = np.stack([A, U @ A @ V])
            norms = operator_norms(stack)
            assert norms[1] == pytest.approx(norms[0], abs=1e-9)

    @given(seed=seeds, dim=dims)
    def test_matches_largest_singular_value(self, seed, dim):
        A = random_matrix(seed, dim)
        expected = np.linalg.svd(A, compute_uv=False)[0]
        assert operator_norm(ComplexMatrix(A)) == pytest.approx(expected, abs=1e-9)

    @given(seed=seeds, dim=dims, c=st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
    @example(seed=0, dim=2, c=2.225e-311)
    def test_homogeneous(self, seed, dim, c):
        A = ComplexMatrix(random_matrix(seed, dim))
        assert operator_norm(A.scale(c)) == pytest.approx(abs(c) * operator_norm(A), abs=1e-8)

    @given(seed=seeds, dim=dims)
    def test_submultiplicative_and_adjoint(self, seed, dim):
        A = ComplexMatrix(random_matrix(seed, dim))
        B = ComplexMatrix(random_matrix(seed ^ 0x5A5A, dim))
        assert operator_norm(A @ B) <= operator_norm(A) * operator_norm(B) + 1e-9
        assert operator_norm(A.adjoint()) == pytest.approx(operator_norm(A), abs=1e-9)

    def test_batched_matches_single(self):
        stack = np.stack([random_matrix(s, 4) for s in range(20)])
        batched = operator_norms(stack)
        single = [operator_norm(ComplexMatrix(m)) for m in stack]
        np.testing.assert_allclose(batched, single, atol=1e-12)


class TestComplexMatrix:

    def test_immutable_entries(self):
        A = ComplexMatrix.identity(2)
        with pytest.raises(ValueError):
            A.entries[0, 0] = 5

    def test_rejects_non_square(self):
        with pytest.raises(ValidationError):
            ComplexMatrix(np.zeros((2, 3)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            ComplexMatrix.identity(2) + ComplexMatrix.identity(3)

    def test_arithmetic_dispatch(self):
        A = ComplexMatrix.from_rows([[1, 2j], [0, 1]])
        B = ComplexMatrix.scalar(2.0, 2)
        assert matrix_arithmetic(A, B, "add") == ComplexMatrix.from_rows([[3, 2j], [0, 3]])
        assert matrix_arithmetic(A, B, "multiply") == A.scale(2)
        assert matrix_arithmetic(A, op="adjoint") == ComplexMatrix.from_rows([[1, 0], [-2j, 1]])
        with pytest.raises(ValidationError):
            matrix_arithmetic(A, op="add")
        with pytest.raises(ValidationError):
            matrix_arithmetic(A, B, op="divide")


class TestSolvers:

    def test_bisect_quadratic_root(self):
        root = bisect_root(lambda r: r + r * r - 0.5, Bracket(0.0, 1.0, 1e-13))
        assert root == pytest.approx((math.sqrt(3) - 1) / 2, abs=1e-12)

    def test_bisect_requires_sign_change(self):
        with pytest.raises(ValidationError):
            bisect_root(lambda r: r + 1.0, Bracket(0.0, 1.0))

    def test_bisect_exact_endpoint(self):
        assert bisect_root(lambda r: r, Bracket(0.0, 1.0)) == 0.0

    def test_bracket_validation(self):
        with pytest.raises(ValidationError):
            Bracket(1.0, 1.0)
        with pytest.raises(ValidationError):
            Bracket(0.0, 1.0, tol=0.0)

    def test_golden_section_parabola(self):
        x, y = golden_section(lambda t: (t - 0.3) ** 2, 0.0, 1.0, 1e-10)
        assert x == pytest.approx(0.3, abs=1e-8)
        assert y == pytest.approx(0.0, abs=1e-12)

    def test_minimize_multimodal(self):
        f = lambda t: math.cos(6 * math.pi * t) + t
        x, y = minimize_1d(f, Bracket(0.0, 1.0, 1e-12), grid_points=512)
        assert x == pytest.approx(1 / 6, abs=5e-3)
        assert y <= f(1 / 6) + 1e-9

    def test_minimize_rejects_small_grid(self):
        with pytest.raises(ValidationError):
            minimize_1d(lambda t: t, Bracket(0.0, 1.0), grid_points=2)

    def test_minimize_never_touches_endpoints(self):
        f = lambda t: 1.0 / t + 1.0 / (1.0 - t)
        x, y = minimize_1d(f, Bracket(0.0, 1.0, 1e-12))
        assert x == pytest.approx(0.5, abs=1e-6)
        assert y == pytest.approx(4.0, abs=1e-9)
