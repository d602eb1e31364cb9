"""
BOHRKIT Convexity Constant Module

Sampled estimate of A_{p,N}(X): the supremum of λ with

    ‖x_0‖^p + Σ_{k=1}^{N} λ^k ‖x_k‖^p ≤ max_θ ‖x_0 + Σ_{k=1}^{N} phase(θ, k) x_k‖^p

for every tuple in X. Each sampled tuple gives its own largest admissible
λ; the minimum over samples is an upper bound of the true constant.

phase(θ, k) is e^{iθ} under common_phase and e^{ikθ} under power_phase.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..numerics.linalg import DEFAULT_TOL
from ..numerics.solvers import Bracket, bisect_root, golden_section
from ...core.sweep import run_sweep
from ...utils.logger import get_logger
from ...utils.validators import validate_choice, validate_positive_int, validate_real


logger = get_logger('bohrkit.radii')

CONVENTIONS = ('power_phase', 'common_phase')
DEFAULT_THETA_GRID = 512
LAMBDA_CAP = 1e12


@dataclass(frozen=True)
class NormedSpace:
    """
    ℂ (name='complex') or ℓ_q^d (name='lq').

    Vectors are arrays whose last axis has length dim.
    """
    name: str = 'complex'
    q: float = 2.0
    d: int = 1

    def __post_init__(self):
        validate_choice(self.name, ('complex', 'lq'), "space")
        validate_real(self.q, "q", 1.0)
        validate_positive_int(self.d, "d")

    @property
    def dim(self) -> int:
        return 1 if self.name == 'complex' else self.d

    @property
    def label(self) -> str:
        return "C" if self.name == 'complex' else f"l{self.q:g}^{self.d}"

    def norm(self, x: np.ndarray) -> np.ndarray:
        if self.name == 'complex':
            return np.abs(x[..., 0])
        return np.linalg.norm(x, ord=self.q, axis=-1)


@dataclass(frozen=True)
class ConvexityEstimate:
    """Minimum over sampled tuples of the per-tuple λ_max."""
    lambda_upper: float
    phase_convention: str  # common_phase, power_phase
    samples: int
    seed: int
    p: float = 2.0
    N: int = 1
    space: str = "C"
    skipped: int = 0  # tuples with x_1 = … = x_N = 0

    @property
    def degenerate(self) -> bool:
        return self.lambda_upper <= DEFAULT_TOL


def _phases(thetas: np.ndarray, N: int, convention: str) -> np.ndarray:
    """Shape (len(thetas), N) array of phase(θ, k), k = 1..N."""
    k = np.arange(1, N + 1)
    if convention == 'common_phase':
        return np.repeat(np.exp(1j * thetas)[:, None], N, axis=1)
    return np.exp(1j * np.outer(thetas, k))


def phase_sup(
    xs: np.ndarray,
    space: NormedSpace,
    convention: str,
    theta_grid: int = DEFAULT_THETA_GRID,
    tol: float = DEFAULT_TOL
) -> float:
    """max_θ ‖x_0 + Σ phase(θ, k) x_k‖ over a θ grid refined by golden section."""
    N = xs.shape[0] - 1
    if N == 0:
        return float(space.norm(xs[0]))

    def value(thetas: np.ndarray) -> np.ndarray:
        combos = xs[0] + _phases(thetas, N, convention) @ xs[1:]
        return space.norm(combos)

    thetas = 2 * np.pi * np.arange(theta_grid) / theta_grid
    values = value(thetas)
    j = int(np.argmax(values))
    step = 2 * np.pi / theta_grid

    _, neg = golden_section(lambda t: -float(value(np.array([t]))[0]), thetas[j] - step, thetas[j] + step, tol)
    return max(float(values[j]), -neg)


def tuple_lambda_max(
    xs: Sequence,
    p: float,
    space: NormedSpace = NormedSpace(),
    convention: str = 'power_phase',
    theta_grid: int = DEFAULT_THETA_GRID,
    tol: float = DEFAULT_TOL
) -> Optional[float]:
    """
    Largest λ admissible for one tuple (x_0, …, x_N).

    Returns:
        λ_max, or None when x_1 = … = x_N = 0 (λ unconstrained)
    """
    xs = np.asarray(xs, dtype=np.complex128).reshape(-1, space.dim)
    norms_p = space.norm(xs) ** p
    tail = norms_p[1:]
    if not np.any(tail > 0):
        return None

    budget = phase_sup(xs, space, convention, theta_grid, tol) ** p - norms_p[0]
    if budget <= 0:
        return 0.0

    powers = np.arange(1, tail.size + 1)
    excess = lambda lam: float(np.sum(tail * lam ** powers)) - budget

    hi = 1.0
    while excess(hi) < 0:
        hi *= 2.0
        if hi > LAMBDA_CAP:
            return LAMBDA_CAP
    return bisect_root(excess, Bracket(0.0, hi, tol * max(1.0, hi)))


def draw_tuple(index: int, rng: np.random.Generator, N: int, space: NormedSpace) -> np.ndarray:
    """
    Random tuple (x_0, …, x_N) with a random scale on x_0.

    Sample 0 has x_0 = 0. For N ≥ 2 sample 1 is the cancellation tuple
    x_2 = −x_1 with the other x_k (k ≥ 3) zero.
    """
    shape = (N + 1, space.dim)
    xs = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    xs[0] *= rng.random() ** 2
    if index == 0:
        xs[0] = 0
    elif index == 1 and N >= 2:
        xs[2] = -xs[1]
        xs[3:] = 0
    return xs


def estimate_A_pN(
    p: float,
    N: int,
    space: NormedSpace = NormedSpace(),
    convention: str = 'power_phase',
    samples: int = 200,
    seed: int = 0,
    theta_grid: int = DEFAULT_THETA_GRID,
    tol: float = DEFAULT_TOL,
    workers: int = 1
) -> ConvexityEstimate:
    """
    Sampled upper estimate of A_{p,N}(X).

    Args:
        p: Exponent, p ≥ 2
        N: Order
        space: ℂ or ℓ_q^d
        convention: power_phase or common_phase
        samples: Number of tuples
        seed: Root seed
        theta_grid: θ grid size before golden-section refinement
        tol: Bisection/refinement tolerance
        workers: Sweep threads

    Returns:
        ConvexityEstimate (skipped tuples do not constrain λ)
    """
    p = validate_real(p, "p", 2.0)
    N = validate_positive_int(N, "N")
    validate_choice(convention, CONVENTIONS, "phase_convention")
    samples = validate_positive_int(samples, "samples")
    theta_grid = validate_positive_int(theta_grid, "theta_grid", minimum=8)

    def task(index: int, rng: np.random.Generator) -> Optional[float]:
        return tuple_lambda_max(draw_tuple(index, rng, N, space), p, space, convention, theta_grid, tol)

    lambdas = run_sweep(task, samples, seed, workers)
    admissible = [lam for lam in lambdas if lam is not None]
    lam_min = min(admissible) if admissible else math.inf

    estimate = ConvexityEstimate(
        lambda_upper=lam_min,
        phase_convention=convention,
        samples=samples,
        seed=seed,
        p=p,
        N=N,
        space=space.label,
        skipped=len(lambdas) - len(admissible),
    )
    if estimate.degenerate:
        logger.warning("A_{%g,%d}(%s) collapses to 0 under %s", p, N, space.label, convention)
    return estimate
