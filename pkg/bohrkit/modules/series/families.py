"""
BOHRKIT Function Families Module

Generators for the test functions fed to the verifiers: disk
automorphisms, Blaschke products, subordination-built operator functions
and seeded random families. Every generator sets a certified norm bound.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .power_series import (
    MatrixPowerSeries,
    SchwarzSeries,
    cauchy_product,
    compose,
    normalize_to_unit_ball,
    shift,
    tensor_identity,
)
from ...core.errors import ValidationError
from ...core.sweep import run_sweep
from ...utils.logger import get_logger
from ...utils.validators import validate_choice, validate_open_disk, validate_positive_int, validate_real


logger = get_logger('bohrkit.series')

DEFAULT_DEGREE = 64
DEFAULT_BOUNDARY_GRID = 2048

# Zeros of random Blaschke factors stay inside this radius.
ZERO_RADIUS = 0.95
# |α| ceiling for random subordination samples.
ALPHA_RADIUS = 0.9

FAMILIES = ('mobius', 'blaschke', 'poly_random', 'subordination', 'constant')


def mobius_series(alpha: complex, D: int = DEFAULT_DEGREE) -> MatrixPowerSeries:
    """
    Truncated series of (α − z)/(1 − ᾱz).

    Coefficients: a_0 = α, a_n = −(1 − |α|²) ᾱ^{n−1} for n ≥ 1.
    """
    alpha = validate_open_disk(alpha, "alpha")
    D = validate_positive_int(D, "D", minimum=0)

    coeffs = np.empty(D + 1, dtype=np.complex128)
    coeffs[0] = alpha
    if D >= 1:
        coeffs[1:] = -(1 - abs(alpha) ** 2) * np.conj(alpha) ** np.arange(D)
    exact = alpha == 0 and D >= 1
    return MatrixPowerSeries.from_scalars(coeffs, norm_bound=1.0, exact=exact)


def blaschke_series(zeros: Sequence[complex], D: int = DEFAULT_DEGREE) -> MatrixPowerSeries:
    """
    Truncated Blaschke product Π_j (a_j − z)/(1 − ā_j z).

    An empty zero list gives the constant 1.
    """
    D = validate_positive_int(D, "D", minimum=0)
    result = MatrixPowerSeries.constant(1.0)
    for j, a in enumerate(zeros):
        factor = mobius_series(validate_open_disk(a, f"zeros[{j}]"), D)
        result = cauchy_product(result, factor, D)
    return result.with_bound(1.0)


def subordinate_operator_function(
    alpha: complex,
    psi: SchwarzSeries,
    d: int = 1,
    D: int = DEFAULT_DEGREE
) -> MatrixPowerSeries:
    """
    f = αI − (1 − |α|²) Σ_{n≥1} ᾱ^{n−1} ψ^n · I_d.

    This is the Möbius map composed with ψ; since ψ^n starts at z^n the
    n-sum stops at D and the retained coefficients are exact.

    Args:
        alpha: Constant term, |α| < 1
        psi: Schwarz function
        d: Matrix dimension
        D: Truncation degree

    Returns:
        Series with certified norm bound 1
    """
    alpha = validate_open_disk(alpha, "alpha")
    d = validate_positive_int(d, "d")
    D = validate_positive_int(D, "D", minimum=0)
    if psi.norm_bound is None or psi.norm_bound > 1.0:
        raise ValidationError("psi must carry a certified bound <= 1", field="psi")

    scalar = compose(mobius_series(alpha, D), psi, D)
    return tensor_identity(scalar, d).with_bound(1.0)


def random_polynomial(
    rng: np.random.Generator,
    degree: int,
    dim: int = 1,
    scalar_constant: bool = False,
    grid: int = DEFAULT_BOUNDARY_GRID
) -> MatrixPowerSeries:
    """
    Polynomial with complex Gaussian coefficients scaled into the unit ball.

    Args:
        rng: Generator owned by the calling sample
        degree: Polynomial degree
        dim: Matrix dimension
        scalar_constant: Force A_0 = a_0·I
        grid: Boundary grid for the sup-norm certificate
    """
    degree = validate_positive_int(degree, "degree", minimum=0)
    dim = validate_positive_int(dim, "dim")
    shape = (degree + 1, dim, dim)
    coeffs = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    if scalar_constant:
        coeffs[0] = coeffs[0, 0, 0] * np.eye(dim)
    return normalize_to_unit_ball(MatrixPowerSeries(coeffs, exact=True), grid)


def random_zeros(rng: np.random.Generator, count: int, radius: float = ZERO_RADIUS) -> np.ndarray:
    """count points uniformly distributed in the disk of the given radius."""
    moduli = radius * np.sqrt(rng.random(count))
    angles = 2 * np.pi * rng.random(count)
    return moduli * np.exp(1j * angles)


def random_blaschke(rng: np.random.Generator, zeros: int, D: int = DEFAULT_DEGREE) -> MatrixPowerSeries:
    """Blaschke product with zeros random zeros."""
    zeros = validate_positive_int(zeros, "zeros", minimum=0)
    return blaschke_series(random_zeros(rng, zeros), D)


def random_schwarz(rng: np.random.Generator, zeros: int, D: int = DEFAULT_DEGREE) -> SchwarzSeries:
    """ψ(z) = z·B(z) for a random Blaschke product B (zeros = 0 gives ψ = z)."""
    D = validate_positive_int(D, "D", minimum=1)
    inner = random_blaschke(rng, zeros, D - 1)
    return SchwarzSeries.from_series(shift(inner, 1))


@dataclass(frozen=True)
class FamilySpec:
    """
    A seeded family of certified unit-ball test functions.

    Attributes:
        name: One of FAMILIES
        samples: Number of members
        seed: Root seed (ignored by the deterministic Möbius and constant families)
        dim: Matrix dimension of every member
        degree: Truncation degree for infinite series
        poly_degree: Degree of random polynomials
        max_zeros: Upper limit for the number of random Blaschke zeros
        grid: Boundary grid used to certify random polynomials
        scalar_constant: Force A_0 = a_0·I in random polynomials
        a_max: Largest Möbius parameter in the deterministic grid; None spaces
            the grid as (j+1)/(samples+1)
    """
    name: str
    samples: int
    seed: int = 0
    dim: int = 1
    degree: int = DEFAULT_DEGREE
    poly_degree: int = 6
    max_zeros: int = 3
    grid: int = DEFAULT_BOUNDARY_GRID
    a_max: Optional[float] = None
    scalar_constant: bool = False

    def __post_init__(self):
        validate_choice(self.name, FAMILIES, "family")
        validate_positive_int(self.samples, "samples")
        validate_positive_int(self.dim, "dim")
        validate_positive_int(self.degree, "degree", minimum=0)
        validate_positive_int(self.poly_degree, "poly_degree", minimum=0)
        validate_positive_int(self.max_zeros, "max_zeros")
        if self.a_max is not None:
            validate_real(self.a_max, "a_max", 0.0, 1.0, high_open=True)

    def mobius_parameter(self, index: int) -> float:
        if self.a_max is None:
            return (index + 1) / (self.samples + 1)
        if self.samples == 1:
            return self.a_max
        return self.a_max * (index + 1) / self.samples

    def member(self, index: int, rng: np.random.Generator) -> MatrixPowerSeries:
        """Member index of the family, drawn from the generator of that index."""
        if self.name == 'mobius':
            return tensor_identity(mobius_series(self.mobius_parameter(index), self.degree), self.dim)
        if self.name == 'constant':
            return MatrixPowerSeries.constant(1.0, self.dim)
        if self.name == 'blaschke':
            zeros = int(rng.integers(1, self.max_zeros + 1))
            return tensor_identity(random_blaschke(rng, zeros, self.degree), self.dim)
        if self.name == 'subordination':
            alpha = complex(random_zeros(rng, 1, ALPHA_RADIUS)[0])
            zeros = int(rng.integers(0, self.max_zeros + 1))
            psi = random_schwarz(rng, zeros, max(self.degree, 1))
            return subordinate_operator_function(alpha, psi, self.dim, self.degree)
        return random_polynomial(rng, self.poly_degree, self.dim, self.scalar_constant, self.grid)


def generate_family(spec: FamilySpec, workers: int = 1) -> List[MatrixPowerSeries]:
    """All members of the family in index order."""
    members = run_sweep(spec.member, spec.samples, spec.seed, workers)
    logger.debug("Generated family %s: %d members, dim %d", spec.name, len(members), spec.dim)
    return members
