"""
BOHRKIT Power Series Module

Truncated power series Σ A_n z^n with d×d complex matrix coefficients:
evaluation, majorant series, Cauchy products, composition with Schwarz
functions, rotations and boundary sup-norm estimates.

Coefficients live in one read-only (D+1, d, d) numpy array. Two flags
describe what the coefficients stand for:

* exact: the series *is* the function (a polynomial); otherwise it is the
  truncation of a holomorphic function at degree D.
* norm_bound: a certified bound on sup_{|z|<1} ‖f(z)‖ of that function.
"""

import hashlib
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..numerics.linalg import DEFAULT_TOL, ComplexMatrix, operator_norms
from ...core.errors import DimensionError, ValidationError
from ...utils.logger import get_logger
from ...utils.validators import validate_positive_int, validate_real


logger = get_logger('bohrkit.series')

Scalar = Union[int, float, complex]

# Evaluation points may sit on the closed disk up to roundoff.
DISK_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class MatrixPowerSeries:
    """
    Truncated power series with matrix coefficients.

    Attributes:
        coeffs: Array of shape (D+1, d, d); coefficient A_n is coeffs[n]
        norm_bound: Certified sup-norm bound on the disk, if known
        exact: True when the series is a polynomial rather than a truncation
    """
    coeffs: np.ndarray
    norm_bound: Optional[float] = None
    exact: bool = False

    def __post_init__(self):
        array = np.array(self.coeffs, dtype=np.complex128, copy=True)
        if array.ndim != 3 or array.shape[1] != array.shape[2] or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValidationError(f"Coefficients must have shape (D+1, d, d), got {array.shape}", field="coeffs")
        if self.norm_bound is not None and not self.norm_bound >= 0:
            raise ValidationError(f"norm_bound must be nonnegative, got {self.norm_bound}", field="norm_bound")
        array.setflags(write=False)
        object.__setattr__(self, 'coeffs', array)

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def coefficient(self, n: int) -> ComplexMatrix:
        """A_n, or the zero matrix beyond the stored degree."""
        if n < 0 or n > self.degree:
            return ComplexMatrix.zeros(self.dim)
        return ComplexMatrix(self.coeffs[n])

    @property
    def coefficients(self) -> List[ComplexMatrix]:
        return [ComplexMatrix(c) for c in self.coeffs]

    def coefficient_norms(self, tol: float = DEFAULT_TOL) -> np.ndarray:
        """‖A_0‖, …, ‖A_D‖ in operator norm."""
        return operator_norms(self.coeffs, tol=tol)

    def is_scalar_constant_term(self) -> bool:
        """True when A_0 = a_0·I."""
        a0 = self.coeffs[0]
        return np.array_equal(a0, a0[0, 0] * np.eye(self.dim))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def with_bound(self, norm_bound: Optional[float], exact: Optional[bool] = None) -> 'MatrixPowerSeries':
        return MatrixPowerSeries(self.coeffs, norm_bound, self.exact if exact is None else exact)

    def truncate(self, degree: int) -> 'MatrixPowerSeries':
        """Keep A_0..A_degree; the result is exact only if nothing was cut."""
        degree = validate_positive_int(degree, "degree", minimum=0)
        if degree >= self.degree:
            return pad(self, degree)
        dropped = np.any(self.coeffs[degree + 1:])
        return MatrixPowerSeries(self.coeffs[:degree + 1], self.norm_bound, self.exact and not dropped)

    # Constructors

    @classmethod
    def from_matrices(cls, matrices: Sequence[ComplexMatrix], **kwargs) -> 'MatrixPowerSeries':
        if not matrices:
            raise ValidationError("A series needs at least one coefficient", field="coeffs")
        dims = {m.dim for m in matrices}
        if len(dims) != 1:
            raise DimensionError(f"Coefficients of mixed dimension: {sorted(dims)}", min(dims), max(dims))
        return cls(np.stack([m.entries for m in matrices]), **kwargs)

    @classmethod
    def from_scalars(cls, values: Sequence[Scalar], dim: int = 1, **kwargs) -> 'MatrixPowerSeries':
        """Σ a_n z^n · I_dim."""
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim != 1 or values.size == 0:
            raise ValidationError("Scalar coefficients must be a non-empty 1-D sequence", field="coeffs")
        return cls(values[:, None, None] * np.eye(dim)[None, :, :], **kwargs)

    @classmethod
    def constant(cls, value: Union[Scalar, ComplexMatrix], dim: int = 1) -> 'MatrixPowerSeries':
        if isinstance(value, ComplexMatrix):
            coeffs = value.entries[None, :, :]
            bound = None
        else:
            coeffs = complex(value) * np.eye(dim)[None, :, :]
            bound = abs(complex(value))
        return cls(coeffs, norm_bound=bound, exact=True)

    @classmethod
    def monomial(cls, k: int, dim: int = 1, value: Scalar = 1.0) -> 'MatrixPowerSeries':
        """value·z^k·I_dim."""
        coeffs = np.zeros((k + 1, dim, dim), dtype=np.complex128)
        coeffs[k] = complex(value) * np.eye(dim)
        return cls(coeffs, norm_bound=abs(complex(value)), exact=True)

    def __repr__(self) -> str:
        return (f"MatrixPowerSeries(dim={self.dim}, degree={self.degree}, "
                f"norm_bound={self.norm_bound}, exact={self.exact})")


@dataclass(frozen=True, eq=False)
class SchwarzSeries(MatrixPowerSeries):
    """
    Scalar series ψ with ψ(0) = 0 and certified ‖ψ‖ ≤ 1: a Schwarz function.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 1:
            raise ValidationError(f"A Schwarz series is scalar, got dim {self.dim}", field="dim")
        if self.coeffs[0, 0, 0] != 0:
            raise ValidationError("A Schwarz series must vanish at 0", field="coeffs")
        if self.norm_bound is None or self.norm_bound > 1.0 + DISK_SLACK:
            raise ValidationError(
                f"A Schwarz series needs a certified bound <= 1, got {self.norm_bound}",
                field="norm_bound"
            )

    @classmethod
    def from_series(cls, f: MatrixPowerSeries) -> 'SchwarzSeries':
        return cls(f.coeffs, f.norm_bound, f.exact)

    @classmethod
    def identity(cls) -> 'SchwarzSeries':
        """ψ(z) = z."""
        return cls(np.array([[[0.0]], [[1.0]]]), 1.0, True)

    @classmethod
    def power(cls, k: int) -> 'SchwarzSeries':
        """ψ(z) = z^k."""
        k = validate_positive_int(k, "k")
        return cls.from_series(MatrixPowerSeries.monomial(k))


def pad(f: MatrixPowerSeries, degree: int) -> MatrixPowerSeries:
    """Extend with zero coefficients up to degree (never truncates)."""
    if degree <= f.degree:
        return f
    extra = np.zeros((degree - f.degree, f.dim, f.dim), dtype=np.complex128)
    return MatrixPowerSeries(np.concatenate([f.coeffs, extra]), f.norm_bound, f.exact)


def _check_same_dim(f: MatrixPowerSeries, g: MatrixPowerSeries) -> None:
    if f.dim != g.dim:
        raise DimensionError(f"Series dimension mismatch: {f.dim} vs {g.dim}", f.dim, g.dim)


def add(f: MatrixPowerSeries, g: MatrixPowerSeries) -> MatrixPowerSeries:
    """f + g, padded to the larger degree."""
    _check_same_dim(f, g)
    degree = max(f.degree, g.degree)
    if not (f.exact and g.exact):
        degree = min(d.degree for d in (f, g) if not d.exact)
    coeffs = pad(f, degree).coeffs[:degree + 1] + pad(g, degree).coeffs[:degree + 1]
    bound = None if f.norm_bound is None or g.norm_bound is None else f.norm_bound + g.norm_bound
    return MatrixPowerSeries(coeffs, bound, f.exact and g.exact)


def scale(f: MatrixPowerSeries, c: Scalar) -> MatrixPowerSeries:
    """c·f."""
    bound = None if f.norm_bound is None else abs(complex(c)) * f.norm_bound
    return MatrixPowerSeries(complex(c) * f.coeffs, bound, f.exact)


def shift(f: MatrixPowerSeries, k: int) -> MatrixPowerSeries:
    """z^k·f."""
    k = validate_positive_int(k, "k", minimum=0)
    extra = np.zeros((k, f.dim, f.dim), dtype=np.complex128)
    return MatrixPowerSeries(np.concatenate([extra, f.coeffs]), f.norm_bound, f.exact)


def tensor_identity(f: MatrixPowerSeries, dim: int) -> MatrixPowerSeries:
    """Scalar series f ⊗ I_dim."""
    if f.dim != 1:
        raise ValidationError(f"Only scalar series can be tensored with I, got dim {f.dim}", field="dim")
    dim = validate_positive_int(dim, "dim")
    return MatrixPowerSeries(f.coeffs[:, 0, 0][:, None, None] * np.eye(dim)[None, :, :], f.norm_bound, f.exact)


def evaluate(f: MatrixPowerSeries, z: complex) -> ComplexMatrix:
    """Σ_{n≤D} A_n z^n by Horner's scheme, for |z| ≤ 1."""
    if abs(z) > 1.0 + DISK_SLACK:
        raise ValidationError(f"Evaluation point must lie in the closed unit disk, |z| = {abs(z)}", field="z")
    return ComplexMatrix(evaluate_many(f, np.array([z]))[0])


def evaluate_many(f: MatrixPowerSeries, zs: np.ndarray) -> np.ndarray:
    """Horner evaluation at every point of zs; returns shape (len(zs), d, d)."""
    zs = np.asarray(zs, dtype=np.complex128)
    acc = np.broadcast_to(f.coeffs[-1], (zs.size, f.dim, f.dim)).copy()
    for n in range(f.degree - 1, -1, -1):
        acc = acc * zs[:, None, None] + f.coeffs[n]
    return acc


def majorant(f: MatrixPowerSeries, r: float, tol: float = DEFAULT_TOL) -> float:
    """M_r(f) = Σ ‖A_n‖ r^n over the stored coefficients, r ∈ [0, 1)."""
    r = validate_real(r, "r", 0.0, 1.0, high_open=True)
    norms = f.coefficient_norms(tol)
    return float(np.sum(norms * r ** np.arange(f.degree + 1)))


def _resolved_degree(requested: int, *operands: MatrixPowerSeries) -> int:
    """Clip the output degree to the degrees at which truncated inputs are still exact."""
    degree = requested
    for operand in operands:
        if not operand.exact:
            degree = min(degree, operand.degree)
    if degree < requested:
        logger.debug("Output degree clipped from %d to %d by truncated operands", requested, degree)
    return degree


def cauchy_product(f: MatrixPowerSeries, g: MatrixPowerSeries, D_out: int) -> MatrixPowerSeries:
    """
    Coefficients C_n = Σ_{k≤n} A_k B_{n−k} for n ≤ D_out.

    When an operand is a truncation, coefficients past its degree are not
    determined and the output degree is clipped to it.
    """
    _check_same_dim(f, g)
    D_out = validate_positive_int(D_out, "D_out", minimum=0)
    degree = _resolved_degree(D_out, f, g)

    a = pad(f, degree).coeffs
    b = pad(g, degree).coeffs
    out = np.zeros((degree + 1, f.dim, f.dim), dtype=np.complex128)
    for n in range(degree + 1):
        out[n] = np.sum(a[:n + 1] @ b[n::-1], axis=0)

    bound = None if f.norm_bound is None or g.norm_bound is None else f.norm_bound * g.norm_bound
    exact = f.exact and g.exact and degree >= f.degree + g.degree
    return MatrixPowerSeries(out, bound, exact)


def compose(g: MatrixPowerSeries, phi: SchwarzSeries, D_out: int) -> MatrixPowerSeries:
    """
    Truncated series of g∘φ for a Schwarz function φ.

    Since φ(0) = 0, coefficient n of g∘φ depends only on B_0..B_n and the
    first n coefficients of φ, so every retained coefficient is exact.
    Horner's scheme in the series ring: g∘φ = B_0 + φ(B_1 + φ(B_2 + …)).
    """
    if not isinstance(phi, SchwarzSeries):
        raise ValidationError("The inner function must be a SchwarzSeries", field="phi")
    D_out = validate_positive_int(D_out, "D_out", minimum=0)
    degree = _resolved_degree(D_out, g, phi)

    g_coeffs = pad(g, degree).coeffs.reshape(-1, g.dim * g.dim)
    phi_coeffs = pad(phi, degree).coeffs[:degree + 1, 0, 0]

    # Multiplication by φ, truncated at degree, as a lower-triangular Toeplitz matrix
    lag = np.arange(degree + 1)[:, None] - np.arange(degree + 1)[None, :]
    multiply = np.where(lag >= 0, phi_coeffs[np.clip(lag, 0, None)], 0)

    acc = np.zeros((degree + 1, g.dim * g.dim), dtype=np.complex128)
    for n in range(min(g.degree, degree), -1, -1):
        acc = multiply @ acc
        acc[0] += g_coeffs[n]
    acc = acc.reshape(degree + 1, g.dim, g.dim)

    exact = g.exact and phi.exact and degree >= g.degree * phi.degree
    return MatrixPowerSeries(acc, g.norm_bound, exact)


def rotation_average(f: MatrixPowerSeries, n: int) -> MatrixPowerSeries:
    """
    (1/n) Σ_{j=1}^{n} f(ξ^j z) with ξ = e^{2πi/n}.

    Computed exactly as an index filter: A_k survives iff n divides k.
    """
    n = validate_positive_int(n, "n")
    mask = (np.arange(f.degree + 1) % n == 0)[:, None, None]
    return MatrixPowerSeries(np.where(mask, f.coeffs, 0), f.norm_bound, f.exact)


def rotate_coefficients(f: MatrixPowerSeries, t: float) -> MatrixPowerSeries:
    """f(z e^{it}): coefficient n is multiplied by e^{int}."""
    phases = np.exp(1j * t * np.arange(f.degree + 1))
    return MatrixPowerSeries(f.coeffs * phases[:, None, None], f.norm_bound, f.exact)


def derivative_bound(f: MatrixPowerSeries, rho: float, tol: float = DEFAULT_TOL) -> float:
    """Σ_n n‖A_n‖ρ^{n−1}, a bound on ‖f'‖ over |z| = ρ."""
    if f.degree == 0:
        return 0.0
    n = np.arange(1, f.degree + 1)
    return float(np.sum(n * f.coefficient_norms(tol)[1:] * rho ** (n - 1)))


def boundary_sup_estimate(
    f: MatrixPowerSeries,
    rho: float = 1.0,
    grid: int = 2048,
    tol: float = DEFAULT_TOL
) -> Tuple[float, float]:
    """
    Bracket the maximum of ‖f‖ on the circle |z| = ρ.

    Args:
        f: Series to sample
        rho: Circle radius in (0, 1]
        grid: Number of equally spaced sample angles (>= 8)

    Returns:
        (lower, certified_upper): the sampled maximum, and that maximum
        inflated by h·Σ n‖A_n‖ρ^{n−1} with h = πρ·(2π/grid), which bounds
        the variation of ‖f‖ between neighbouring samples
    """
    rho = validate_real(rho, "rho", 0.0, 1.0, low_open=True)
    grid = validate_positive_int(grid, "grid", minimum=8)

    thetas = 2 * np.pi * np.arange(grid) / grid
    values = evaluate_many(f, rho * np.exp(1j * thetas))
    lower = float(np.max(operator_norms(values, tol=tol)))

    h = math.pi * rho * (2 * math.pi / grid)
    return lower, lower + h * derivative_bound(f, rho, tol)


def normalize_to_unit_ball(f: MatrixPowerSeries, grid: int = 2048, tol: float = DEFAULT_TOL) -> MatrixPowerSeries:
    """
    Scale f by 1/certified_upper so that ‖f‖_∞ ≤ 1 is certified.

    Only polynomials are accepted: the boundary estimate certifies the
    stored coefficients, not an unseen tail.
    """
    if f.is_zero():
        raise ValidationError("Cannot normalize the zero series", field="f")
    if not f.exact:
        raise ValidationError("Only polynomial (exact) series can be normalized", field="f")
    _, upper = boundary_sup_estimate(f, 1.0, grid, tol)
    scaled = MatrixPowerSeries(f.coeffs / upper, 1.0, True)
    logger.debug("normalize_to_unit_ball: scale %.6g", 1.0 / upper)
    return scaled


def coefficient_fingerprint(f: MatrixPowerSeries) -> str:
    """First 12 hex digits of the SHA-256 of the coefficient bytes."""
    return hashlib.sha256(np.ascontiguousarray(f.coeffs).tobytes()).hexdigest()[:12]
