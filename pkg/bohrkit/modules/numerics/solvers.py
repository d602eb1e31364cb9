"""
BOHRKIT Scalar Solvers Module

Bracketed bisection and grid-then-golden-section minimisation on an
interval. Both are deterministic and never evaluate outside the bracket.
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple

from ...core.errors import ValidationError
from ...utils.logger import get_logger


logger = get_logger('bohrkit.numerics')

INVPHI = (math.sqrt(5) - 1) / 2   # 1 / phi
INVPHI2 = (3 - math.sqrt(5)) / 2  # 1 / phi^2

DEFAULT_GRID_POINTS = 4096

RealFunction = Callable[[float], float]


@dataclass(frozen=True)
class Bracket:
    """Closed interval [lo, hi] together with the target width tol."""
    lo: float
    hi: float
    tol: float = 1e-12

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValidationError(f"Bracket needs lo < hi, got [{self.lo}, {self.hi}]", field="bracket")
        if not self.tol > 0:
            raise ValidationError(f"Bracket tol must be positive, got {self.tol}", field="tol")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def bisect_root(f: RealFunction, bracket: Bracket) -> float:
    """
    Root of a continuous f inside a sign-changing bracket.

    Args:
        f: Continuous real function
        bracket: Interval whose endpoint values differ in sign

    Returns:
        Midpoint of a sub-interval of width <= bracket.tol that still
        brackets the sign change (or an exact root met on the way)
    """
    lo, hi = bracket.lo, bracket.hi
    f_lo, f_hi = f(lo), f(hi)

    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValidationError(
            f"f has the same sign at both ends of [{lo}, {hi}]: {f_lo}, {f_hi}",
            field="bracket"
        )

    steps = 0
    while hi - lo > bracket.tol:
        mid = lo + (hi - lo) / 2
        if mid <= lo or mid >= hi:
            break  # interval at float resolution
        f_mid = f(mid)
        steps += 1
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    logger.debug("bisect_root: %d steps, width %.3g", steps, hi - lo)
    return lo + (hi - lo) / 2


def golden_section(f: RealFunction, a: float, b: float, tol: float) -> Tuple[float, float]:
    """
    Golden-section search on [a, b], evaluating interior points only.

    Returns:
        (x, f(x)) for the best point found
    """
    h = b - a
    if h <= tol:
        x = a + h / 2
        return x, f(x)

    n = int(math.ceil(math.log(tol / h) / math.log(INVPHI)))
    c = a + INVPHI2 * h
    d = a + INVPHI * h
    yc, yd = f(c), f(d)

    for _ in range(n - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h = INVPHI * h
            c = a + INVPHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = INVPHI * h
            d = a + INVPHI * h
            yd = f(d)

    return (c, yc) if yc < yd else (d, yd)


def minimize_1d(
    f: RealFunction,
    bracket: Bracket,
    grid_points: int = DEFAULT_GRID_POINTS
) -> Tuple[float, float]:
    """
    Minimum of f over the open interval (lo, hi).

    A uniform interior grid locates the best cell and golden-section search
    refines inside the two neighbouring cells. No unimodality is assumed;
    limits at the endpoints are left to the caller.

    Args:
        f: Real function, finite on the open interval
        bracket: Search interval; tol is the refinement width
        grid_points: Number of interior grid points (>= 3)

    Returns:
        (argmin, min)
    """
    if grid_points < 3:
        raise ValidationError(f"grid_points must be >= 3, got {grid_points}", field="grid_points")

    lo, hi = bracket.lo, bracket.hi
    step = (hi - lo) / (grid_points + 1)
    best_x, best_y = lo, math.inf
    best_j = 0

    for j in range(grid_points):
        x = lo + (j + 1) * step
        y = f(x)
        if not math.isfinite(y):
            raise ValidationError(f"f is not finite at interior point {x}: {y}", field="f")
        if y < best_y:
            best_x, best_y, best_j = x, y, j

    left = lo + best_j * step
    right = lo + (best_j + 2) * step
    x_ref, y_ref = golden_section(f, left, right, bracket.tol)

    if math.isfinite(y_ref) and y_ref < best_y:
        return x_ref, y_ref
    return best_x, best_y
