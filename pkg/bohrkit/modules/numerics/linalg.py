"""
BOHRKIT Dense Linear Algebra Module

Immutable square complex matrices and a deterministic operator-norm
estimate by power iteration on A*A, batched over stacks of matrices.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ...core.errors import ConvergenceError, DimensionError, ValidationError
from ...utils.logger import get_logger


logger = get_logger('bohrkit.numerics')

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000

Scalar = Union[int, float, complex]


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """
    Dense d×d complex matrix.

    Carrier for the operator coefficients A_n. Entries are stored in a
    read-only numpy array, so instances are safe to share across threads.
    """
    entries: np.ndarray

    def __post_init__(self):
        array = np.asarray(self.entries)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
            raise ValidationError(f"Expected a non-empty square matrix, got shape {array.shape}", field="entries")
        object.__setattr__(self, 'entries', _freeze(array))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> 'ComplexMatrix':
        return cls(np.array(rows, dtype=np.complex128))

    @classmethod
    def identity(cls, dim: int) -> 'ComplexMatrix':
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def zeros(cls, dim: int) -> 'ComplexMatrix':
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    @classmethod
    def scalar(cls, value: Scalar, dim: int = 1) -> 'ComplexMatrix':
        """value·I_dim."""
        return cls(complex(value) * np.eye(dim, dtype=np.complex128))

    def _check_dim(self, other: 'ComplexMatrix') -> None:
        if self.dim != other.dim:
            raise DimensionError(f"Dimension mismatch: {self.dim} vs {other.dim}", self.dim, other.dim)

    def __add__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        self._check_dim(other)
        return ComplexMatrix(self.entries + other.entries)

    def __sub__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        self._check_dim(other)
        return ComplexMatrix(self.entries - other.entries)

    def __matmul__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
        self._check_dim(other)
        return ComplexMatrix(self.entries @ other.entries)

    def scale(self, c: Scalar) -> 'ComplexMatrix':
        return ComplexMatrix(complex(c) * self.entries)

    def adjoint(self) -> 'ComplexMatrix':
        return ComplexMatrix(self.entries.conj().T)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def allclose(self, other: 'ComplexMatrix', atol: float = 1e-12) -> bool:
        return self.dim == other.dim and np.allclose(self.entries, other.entries, rtol=0.0, atol=atol)

    def __repr__(self) -> str:
        return f"ComplexMatrix(dim={self.dim}, entries={self.entries.tolist()})"


def matrix_arithmetic(
    A: ComplexMatrix,
    B: Optional[ComplexMatrix] = None,
    op: str = "add",
    c: Scalar = 1.0
) -> ComplexMatrix:
    """
    Apply one of the elementary matrix operations.

    Args:
        A: Left operand
        B: Right operand (required for add and multiply)
        op: One of 'add', 'multiply', 'scale', 'adjoint'
        c: Scale factor for 'scale'

    Returns:
        The resulting matrix
    """
    if op in ("add", "multiply"):
        if B is None:
            raise ValidationError(f"'{op}' needs two operands", field="B")
        return A + B if op == "add" else A @ B
    if op == "scale":
        return A.scale(c)
    if op == "adjoint":
        return A.adjoint()
    raise ValidationError(f"Unknown matrix operation: {op}", field="op")


def _power_iterate(
    gram: np.ndarray,
    x: np.ndarray,
    tol: np.ndarray,
    max_iter: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Power iteration on a stack of Hermitian PSD matrices.

    Each matrix stops on its own once the Rayleigh quotient, taken as a
    singular value, stagnates: either the step is at roundoff level or the
    step extrapolated with the observed contraction rate is below tol.

    Args:
        gram: Stack (m, d, d) of A*A
        x: Unit start vectors (m, d); overwritten
        tol: Absolute tolerance on the singular value, scalar or one per matrix
        max_iter: Iteration cap

    Returns:
        (sigma, x, killed, converged). sigma is NaN where gram maps the
        iterate to zero (killed).
    """
    m = x.shape[0]
    eps = np.finfo(float).eps
    tol = np.broadcast_to(np.asarray(tol, dtype=float), (m,))
    sigma = np.full(m, np.nan)
    step_prev = np.full(m, np.nan)
    killed = np.zeros(m, dtype=bool)
    done = np.zeros(m, dtype=bool)

    for _ in range(max_iter):
        idx = np.flatnonzero(~done)
        if idx.size == 0:
            break

        y = np.einsum('mij,mj->mi', gram[idx], x[idx])
        y_norm = np.linalg.norm(y, axis=1)

        zero = y_norm == 0.0
        if zero.any():
            killed[idx[zero]] = True
            done[idx[zero]] = True
            sigma[idx[zero]] = np.nan
            idx, y, y_norm = idx[~zero], y[~zero], y_norm[~zero]

        rayleigh = np.maximum(np.einsum('mi,mi->m', x[idx].conj(), y).real, 0.0)
        current = np.sqrt(rayleigh)
        x[idx] = y / y_norm[:, None]

        with np.errstate(invalid='ignore', divide='ignore'):
            step = np.abs(current - sigma[idx])
            rate = step / step_prev[idx]
            extrapolated = step * rate / (1.0 - rate)
        stalled = step <= 8 * eps * np.maximum(current, 1.0)
        contracted = (rate < 1.0) & (extrapolated <= tol[idx])

        done[idx[stalled | contracted]] = True
        step_prev[idx] = step
        sigma[idx] = current

    converged = done
    return sigma, x, killed, converged


def _restart_vectors(anchors: np.ndarray) -> np.ndarray:
    """Fixed pseudo-random unit vector made orthogonal to each anchor row."""
    dim = anchors.shape[1]
    rng = np.random.default_rng(0)
    w = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v = w[None, :] - np.einsum('mi,i->m', anchors.conj(), w)[:, None] * anchors
    return v / np.linalg.norm(v, axis=1)[:, None]


def operator_norms(
    stack: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER
) -> np.ndarray:
    """
    Largest singular value of every matrix in a (m, d, d) stack.

    Power iteration on A*A from the normalized all-ones vector. A second,
    deterministic pass restarts from a fixed vector orthogonal to the first
    limit; this escapes starts with no component on the top singular vector.
    Rayleigh quotients never exceed the true value, so the larger of the two
    passes is kept. Each matrix is divided by its largest entry modulus
    before A*A is formed, so tiny or huge entries neither underflow nor
    overflow; an all-zero matrix has norm 0.

    Raises:
        ConvergenceError: The first pass hit max_iter for some matrix;
            carries the last iterates of the unconverged matrices
    """
    if not tol > 0:
        raise ValidationError(f"tol must be positive, got {tol}", field="tol")

    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValidationError(f"Expected a (m, d, d) stack, got shape {stack.shape}", field="stack")

    m, dim = stack.shape[0], stack.shape[1]
    if m == 0:
        return np.zeros(0)
    if dim == 1:
        return np.abs(stack[:, 0, 0])

    scale = np.max(np.abs(stack), axis=(1, 2))
    unit = stack / np.where(scale > 0, scale, 1.0)[:, None, None]
    # Absolute tol on sigma, never looser than tol on the unit-scaled matrix.
    unit_tol = tol / np.maximum(scale, 1.0)

    gram = unit.conj().transpose(0, 2, 1) @ unit
    start = np.full((m, dim), 1.0 / np.sqrt(dim), dtype=np.complex128)

    sigma, x, killed, converged = _power_iterate(gram, start.copy(), unit_tol, max_iter)
    if not converged.all():
        raise ConvergenceError(
            f"Operator norm did not converge in {max_iter} iterations "
            f"for {int((~converged).sum())} of {m} matrices",
            last_iterate=sigma[~converged] * scale[~converged],
            iterations=max_iter
        )

    anchors = np.where(killed[:, None], start, x)
    sigma2, _, _, converged2 = _power_iterate(gram, _restart_vectors(anchors), unit_tol, max_iter)
    if not converged2.all():
        logger.debug("Orthogonal restart stopped at the cap for %d matrices", int((~converged2).sum()))

    result = np.fmax(sigma, sigma2)
    missing = np.isnan(result)
    if missing.any():
        if np.any(scale[missing] > 0):
            raise ConvergenceError(
                "Power iteration collapsed to the null space twice",
                last_iterate=result,
                iterations=max_iter
            )
        result[missing] = 0.0
    return result * scale


def operator_norm(A: ComplexMatrix, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """
    Operator norm ‖A‖ (largest singular value) within absolute error tol.

    Args:
        A: Matrix whose norm is computed
        tol: Absolute tolerance on the singular value
        max_iter: Iteration cap per pass

    Returns:
        The operator norm
    """
    return float(operator_norms(A.entries[None, :, :], tol=tol, max_iter=max_iter)[0])
