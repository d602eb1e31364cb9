"""
BOHRKIT Radius Constants Module

The scalar constants of the order-N lower bound:

    ξ_p = inf_{0<a<1} (1 − a^p)^{1/p} / (1 − a²)
    Ψ_{p,N}(r) = r^p + r^{2p} + … + r^{Np} − ξ_p
    r*_N = the root of Ψ_{p,N} in (0, 1), defined when ξ_p < N
"""

import numpy as np

from ..numerics.solvers import DEFAULT_GRID_POINTS, Bracket, bisect_root, minimize_1d
from ...core.errors import PreconditionError
from ...utils.logger import get_logger
from ...utils.validators import validate_positive_int, validate_real


logger = get_logger('bohrkit.radii')

DEFAULT_TOL = 1e-12


def xi_objective(p: float, a: float) -> float:
    """(1 − a^p)^{1/p} / (1 − a²) for 0 < a < 1."""
    return (1.0 - a ** p) ** (1.0 / p) / (1.0 - a * a)


def xi_p(p: float, tol: float = DEFAULT_TOL, grid_points: int = DEFAULT_GRID_POINTS) -> float:
    """
    ξ_p for p ≥ 1.

    p = 1 is the closed form inf 1/(1+a) = 1/2, approached as a → 1⁻.
    For p > 1 the objective diverges at a → 1⁻, so the infimum is the
    smaller of the a → 0⁺ limit (1) and the interior minimum.
    """
    p = validate_real(p, "p", 1.0)
    if p == 1.0:
        return 0.5

    _, interior = minimize_1d(lambda a: xi_objective(p, a), Bracket(0.0, 1.0, tol), grid_points)
    value = min(1.0, interior)
    logger.debug("xi_p(%g) = %.15g", p, value)
    return value


def xi_argmin(p: float, tol: float = DEFAULT_TOL, grid_points: int = DEFAULT_GRID_POINTS) -> float:
    """Location of the infimum defining ξ_p (1 for p = 1, 0 when the limit at 0 wins)."""
    p = validate_real(p, "p", 1.0)
    if p == 1.0:
        return 1.0
    a, interior = minimize_1d(lambda x: xi_objective(p, x), Bracket(0.0, 1.0, tol), grid_points)
    return a if interior < 1.0 else 0.0


def psi(p: float, N: int, r: float, xi: float) -> float:
    """Ψ_{p,N}(r) = Σ_{k=1}^{N} r^{pk} − ξ."""
    r = validate_real(r, "r", 0.0, 1.0)
    N = validate_positive_int(N, "N")
    k = np.arange(1, N + 1)
    return float(np.sum(r ** (p * k))) - xi


def rstar(p: float, N: int, tol: float = DEFAULT_TOL, grid_points: int = DEFAULT_GRID_POINTS) -> float:
    """
    The root r*_N of Ψ_{p,N} in (0, 1).

    Ψ is strictly increasing with Ψ(0) = −ξ_p < 0 and Ψ(1) = N − ξ_p,
    so the root exists and is unique exactly when ξ_p < N.

    Raises:
        PreconditionError: ξ_p ≥ N
    """
    p = validate_real(p, "p", 1.0)
    N = validate_positive_int(N, "N")
    xi = xi_p(p, tol, grid_points)
    if not xi < N:
        raise PreconditionError(f"r*_N needs xi_p < N, got xi_p = {xi} and N = {N}", xi_p=xi, N=N, p=p)

    return bisect_root(lambda r: psi(p, N, r, xi), Bracket(0.0, 1.0, tol))
