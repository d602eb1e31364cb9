"""Hypothesis strategies and seeded builders shared by the test modules."""

import numpy as np
from hypothesis import strategies as st

from bohrkit.modules.series import MatrixPowerSeries, normalize_to_unit_ball


seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.sampled_from([1, 2, 3])


def random_matrix(seed: int, dim: int) -> np.ndarray:
    gen = np.random.default_rng(seed)
    return gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))


def random_unitary(seed: int, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(random_matrix(seed, dim))
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def polynomial(seed: int, degree: int, dim: int = 1, scalar_constant: bool = False) -> MatrixPowerSeries:
    """Certified unit-ball polynomial with Gaussian coefficients."""
    gen = np.random.default_rng(seed)
    coeffs = gen.standard_normal((degree + 1, dim, dim)) + 1j * gen.standard_normal((degree + 1, dim, dim))
    if scalar_constant:
        coeffs[0] = coeffs[0, 0, 0] * np.eye(dim)
    return normalize_to_unit_ball(MatrixPowerSeries(coeffs, exact=True), grid=512)


@st.composite
def unit_polynomials(draw, max_degree: int = 6, dim=None, scalar_constant: bool = False):
    seed = draw(seeds)
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    d = draw(dims) if dim is None else dim
    return polynomial(seed, degree, d, scalar_constant)
