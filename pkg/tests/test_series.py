"""Tests for matrix power series and the function families."""

import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bohrkit.core.errors import DimensionError, ValidationError
from bohrkit.modules.series import (
    FamilySpec,
    MatrixPowerSeries,
    SchwarzSeries,
    add,
    blaschke_series,
    boundary_sup_estimate,
    cauchy_product,
    coefficient_fingerprint,
    compose,
    evaluate,
    evaluate_many,
    generate_family,
    majorant,
    mobius_series,
    normalize_to_unit_ball,
    random_schwarz,
    rotate_coefficients,
    rotation_average,
    scale,
    shift,
    subordinate_operator_function,
    tensor_identity,
)
from bohrkit.modules.numerics import operator_norms
from strategies import polynomial, seeds, unit_polynomials


class TestConstruction:

    def test_coefficients_are_read_only(self):
        f = MatrixPowerSeries.from_scalars([1, 2, 3])
        with pytest.raises(ValueError):
            f.coeffs[0, 0, 0] = 7

    def test_rejects_bad_shape(self):
        with pytest.raises(ValidationError):
            MatrixPowerSeries(np.zeros((3, 2, 1)))

    def test_rejects_negative_bound(self):
        with pytest.raises(ValidationError):
            MatrixPowerSeries(np.zeros((1, 1, 1)), norm_bound=-1.0)

    def test_monomial(self):
        f = MatrixPowerSeries.monomial(2, dim=3)
        assert f.degree == 2 and f.dim == 3 and f.exact
        assert f.coefficient(2) == MatrixPowerSeries.constant(1.0, 3).coefficient(0)
        assert f.coefficient(5).allclose(MatrixPowerSeries.constant(0.0, 3).coefficient(0))

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionError):
            MatrixPowerSeries.from_matrices([
                MatrixPowerSeries.constant(1.0, 2).coefficient(0),
                MatrixPowerSeries.constant(1.0, 3).coefficient(0),
            ])

    def test_scalar_constant_term(self):
        assert MatrixPowerSeries.from_scalars([0.5, 1.0], dim=2).is_scalar_constant_term()
        coeffs = np.zeros((1, 2, 2))
        coeffs[0, 0, 1] = 1.0
        assert not MatrixPowerSeries(coeffs).is_scalar_constant_term()

    def test_truncate_drops_exactness_only_when_cutting(self):
        f = MatrixPowerSeries.from_scalars([1, 0, 2], exact=True)
        assert not f.truncate(1).exact
        assert f.truncate(4).exact and f.truncate(4).degree == 4


class TestSchwarzSeries:

    def test_identity_and_power(self):
        assert SchwarzSeries.identity().coeffs[:, 0, 0].tolist() == [0, 1]
        assert SchwarzSeries.power(3).coeffs[:, 0, 0].tolist() == [0, 0, 0, 1]

    def test_must_vanish_at_zero(self):
        with pytest.raises(ValidationError):
            SchwarzSeries(np.array([[[0.1]], [[0.5]]]), 1.0, True)

    def test_must_be_scalar(self):
        with pytest.raises(ValidationError):
            SchwarzSeries(np.zeros((2, 2, 2)), 1.0, True)

    def test_needs_certified_bound(self):
        with pytest.raises(ValidationError):
            SchwarzSeries(np.array([[[0.0]], [[0.5]]]))
        with pytest.raises(ValidationError):
            SchwarzSeries(np.array([[[0.0]], [[2.0]]]), 2.0, True)


class TestAlgebra:

    def test_add_polynomials(self):
        f = MatrixPowerSeries.from_scalars([1, 2], exact=True, norm_bound=3.0)
        g = MatrixPowerSeries.from_scalars([0, 0, 5], exact=True, norm_bound=5.0)
        h = add(f, g)
        assert h.coeffs[:, 0, 0].tolist() == [1, 2, 5]
        assert h.exact and h.norm_bound == 8.0

    def test_add_clips_to_truncation(self):
        f = MatrixPowerSeries.from_scalars([1, 1, 1, 1])
        g = MatrixPowerSeries.from_scalars([1, 1], exact=True)
        assert add(f, g).degree == 3
        assert add(MatrixPowerSeries.from_scalars([1, 1]), f).degree == 1

    def test_add_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            add(MatrixPowerSeries.constant(1.0, 1), MatrixPowerSeries.constant(1.0, 2))

    def test_scale_and_shift(self):
        f = MatrixPowerSeries.from_scalars([1, 2], exact=True, norm_bound=3.0)
        g = shift(scale(f, -2j), 2)
        assert g.coeffs[:, 0, 0].tolist() == [0, 0, -2j, -4j]
        assert g.norm_bound == 6.0

    def test_tensor_identity(self):
        f = tensor_identity(MatrixPowerSeries.from_scalars([1, 2]), 3)
        assert f.dim == 3
        np.testing.assert_array_equal(f.coeffs[1], 2 * np.eye(3))
        with pytest.raises(ValidationError):
            tensor_identity(f, 2)

    def test_cauchy_product_difference_of_squares(self):
        f = MatrixPowerSeries.from_scalars([1, 1], exact=True)
        g = MatrixPowerSeries.from_scalars([1, -1], exact=True)
        h = cauchy_product(f, g, 4)
        np.testing.assert_allclose(h.coeffs[:, 0, 0], [1, 0, -1, 0, 0])
        assert h.exact

    def test_cauchy_product_clipped_by_truncation(self):
        f = mobius_series(0.5, 8)
        assert cauchy_product(f, f, 20).degree == 8

    @given(seed=seeds)
    def test_cauchy_product_evaluates_to_matrix_product(self, seed):
        f = polynomial(seed, 3, 2)
        g = polynomial(seed + 1, 4, 2)
        z = 0.6 * cmath.exp(0.7j)
        h = cauchy_product(f, g, 7)
        np.testing.assert_allclose(evaluate(h, z).entries, (evaluate(f, z) @ evaluate(g, z)).entries, atol=1e-12)


class TestEvaluation:

    def test_mobius_closed_form(self):
        f = mobius_series(0.5, 64)
        z = 0.3 + 0.2j
        assert evaluate(f, z).entries[0, 0] == pytest.approx((0.5 - z) / (1 - 0.5 * z), abs=1e-12)

    def test_rejects_points_outside_disk(self):
        with pytest.raises(ValidationError):
            evaluate(MatrixPowerSeries.constant(1.0), 1.01)

    def test_boundary_point_allowed(self):
        f = MatrixPowerSeries.from_scalars([1, 1], exact=True)
        assert evaluate(f, -1.0).entries[0, 0] == 0

    def test_evaluate_many_shape(self):
        f = polynomial(3, 4, 2)
        assert evaluate_many(f, np.linspace(0, 0.5, 7)).shape == (7, 2, 2)

    def test_majorant_of_mobius(self):
        a, r = 0.5, 1 / 3
        expected = a + (1 - a * a) * r / (1 - a * r)
        assert majorant(mobius_series(a, 128), r) == pytest.approx(expected, abs=1e-12)

    def test_majorant_rejects_unit_radius(self):
        with pytest.raises(ValidationError):
            majorant(MatrixPowerSeries.constant(1.0), 1.0)


class TestComposition:

    def test_compose_with_identity_is_noop(self):
        g = polynomial(11, 5, 2)
        h = compose(g, SchwarzSeries.identity(), 5)
        np.testing.assert_allclose(h.coeffs, g.coeffs, atol=1e-15)

    def test_compose_with_power_spreads_coefficients(self):
        g = MatrixPowerSeries.from_scalars([1, 2, 3], exact=True)
        h = compose(g, SchwarzSeries.power(2), 6)
        np.testing.assert_allclose(h.coeffs[:, 0, 0], [1, 0, 2, 0, 3, 0, 0])
        assert h.exact

    def test_compose_requires_schwarz(self):
        with pytest.raises(ValidationError):
            compose(MatrixPowerSeries.constant(1.0), MatrixPowerSeries.monomial(1), 3)

    @given(seed=seeds)
    def test_compose_matches_pointwise(self, seed):
        g = polynomial(seed, 4, 2)
        psi = random_schwarz(np.random.default_rng(seed), 2, 64)
        h = compose(g, psi, 64)
        z = 0.5 * cmath.exp(1.3j)
        inner = evaluate(psi, z).entries[0, 0]
        np.testing.assert_allclose(evaluate(h, z).entries, evaluate(g, inner).entries, atol=1e-10)


class TestRotation:

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_rotation_average_matches_mean_of_rotations(self, n):
        f = polynomial(7, 9, 2)
        z = 0.4 + 0.3j
        xi = cmath.exp(2j * cmath.pi / n)
        mean = sum(evaluate(f, xi ** j * z).entries for j in range(1, n + 1)) / n
        np.testing.assert_allclose(evaluate(rotation_average(f, n), z).entries, mean, atol=1e-12)

    def test_rotation_average_keeps_multiples(self):
        f = MatrixPowerSeries.from_scalars(np.arange(1, 8), exact=True)
        kept = rotation_average(f, 3).coeffs[:, 0, 0].real
        assert kept.tolist() == [1, 0, 0, 4, 0, 0, 7]

    @given(seed=seeds, t=st.floats(min_value=-10, max_value=10))
    def test_rotation_roundtrip_to_roundoff(self, seed, t):
        f = polynomial(seed, 6)
        back = rotate_coefficients(rotate_coefficients(f, t), -t)
        np.testing.assert_allclose(back.coeffs, f.coeffs, atol=1e-12)

    def test_rotation_preserves_coefficient_norms(self):
        f = polynomial(5, 6, 2)
        np.testing.assert_allclose(
            rotate_coefficients(f, 0.9).coefficient_norms(), f.coefficient_norms(), atol=1e-12
        )


class TestNormalization:

    @given(f=unit_polynomials(max_degree=8))
    def test_normalized_polynomial_stays_in_unit_ball(self, f):
        assert f.norm_bound == 1.0
        lower, _ = boundary_sup_estimate(f, 1.0, grid=4096)
        assert lower <= 1.0 + 1e-12

    def test_certified_upper_dominates_lower(self):
        f = polynomial(2, 5, 3)
        lower, upper = boundary_sup_estimate(f, 0.8, grid=64)
        assert lower <= upper

    def test_rejects_zero_and_truncations(self):
        with pytest.raises(ValidationError):
            normalize_to_unit_ball(MatrixPowerSeries.from_scalars([0, 0], exact=True))
        with pytest.raises(ValidationError):
            normalize_to_unit_ball(mobius_series(0.5, 8))

    def test_rejects_small_grid(self):
        with pytest.raises(ValidationError):
            boundary_sup_estimate(MatrixPowerSeries.constant(1.0), grid=4)


class TestFamilies:

    def test_mobius_coefficients(self):
        coeffs = mobius_series(0.5, 4).coeffs[:, 0, 0]
        np.testing.assert_allclose(coeffs, [0.5, -0.75, -0.375, -0.1875, -0.09375])

    def test_mobius_at_zero_is_exact(self):
        f = mobius_series(0, 3)
        assert f.exact
        assert f.coeffs[:, 0, 0].tolist() == [0, -1, 0, 0]

    def test_mobius_rejects_boundary_parameter(self):
        with pytest.raises(ValidationError):
            mobius_series(1.0)

    def test_empty_blaschke_is_one(self):
        f = blaschke_series([])
        assert f.coeffs[:, 0, 0].tolist() == [1] and f.norm_bound == 1.0

    def test_blaschke_has_unit_modulus_inside(self):
        zeros = [0.3, -0.5j]
        f = blaschke_series(zeros, 128)
        z = 0.2 + 0.1j
        expected = np.prod([(a - z) / (1 - np.conj(a) * z) for a in zeros])
        assert evaluate(f, z).entries[0, 0] == pytest.approx(expected, abs=1e-12)

    def test_random_schwarz_without_zeros_is_identity(self):
        psi = random_schwarz(np.random.default_rng(0), 0, 16)
        assert psi.coeffs[:, 0, 0].tolist() == [0, 1]

    def test_subordinate_function_with_identity_is_mobius(self):
        f = subordinate_operator_function(0.4, SchwarzSeries.identity(), d=2, D=32)
        expected = tensor_identity(mobius_series(0.4, 32), 2)
        np.testing.assert_allclose(f.coeffs, expected.coeffs, atol=1e-15)
        assert f.norm_bound == 1.0 and f.is_scalar_constant_term()

    def test_mobius_parameter_grid(self):
        assert FamilySpec('mobius', samples=3).mobius_parameter(0) == 0.25
        spec = FamilySpec('mobius', samples=4, a_max=0.8)
        assert [spec.mobius_parameter(i) for i in range(4)] == pytest.approx([0.2, 0.4, 0.6, 0.8])

    def test_spec_validation(self):
        with pytest.raises(ValidationError):
            FamilySpec('cardioid', samples=3)
        with pytest.raises(ValidationError):
            FamilySpec('mobius', samples=0)

    @pytest.mark.parametrize("name", ['mobius', 'blaschke', 'poly_random', 'subordination', 'constant'])
    def test_members_are_certified(self, name):
        spec = FamilySpec(name, samples=4, seed=9, dim=2, degree=32, poly_degree=4, grid=256)
        for f in generate_family(spec):
            assert f.dim == 2
            assert f.norm_bound is not None and f.norm_bound <= 1.0 + 1e-12
            values = evaluate_many(f, 0.5 * np.exp(2j * np.pi * np.arange(64) / 64))
            assert np.max(operator_norms(values)) <= 1.0 + 1e-6

    def test_family_independent_of_worker_count(self):
        spec = FamilySpec('subordination', samples=6, seed=42, dim=2, degree=16)
        serial = [coefficient_fingerprint(f) for f in generate_family(spec, workers=1)]
        pooled = [coefficient_fingerprint(f) for f in generate_family(spec, workers=4)]
        assert serial == pooled

    def test_seed_changes_random_members(self):
        first = generate_family(FamilySpec('poly_random', samples=2, seed=1, poly_degree=3, grid=128))
        second = generate_family(FamilySpec('poly_random', samples=2, seed=2, poly_degree=3, grid=128))
        assert coefficient_fingerprint(first[0]) != coefficient_fingerprint(second[0])
