"""
BOHRKIT Rogosinski Module

Refined Rogosinski inequalities for polynomial operator functions and the
identities behind them.

For a polynomial f = Σ A_m z^m and an angle t:

    R_l  = Σ_{m≤l} A_m e^{imt}              (rotated partial sums)
    T_l  = Σ_{m≤n} A_{m+l} e^{imt}, l ≥ 1   (shifted windows)
    H_n  = Σ_{l≤n} R_l
    p(n) = Σ_{l≥1} ‖T_l‖² / (n+1)
    q(n) = Σ_{l≤n} (1 − ‖R_l‖²)/(1 + ‖R_l‖²) / (n+1)

Only polynomials are accepted, so every l-sum is finite and exact.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..numerics.linalg import DEFAULT_TOL, operator_norms
from ..series.power_series import MatrixPowerSeries, coefficient_fingerprint, evaluate_many
from ...core.errors import ValidationError
from ...core.reports import SLACK_CLOSED, VerificationReport
from ...utils.logger import get_logger
from ...utils.validators import validate_choice, validate_positive_int, validate_real


logger = get_logger('bohrkit.inequalities')

ROGOSINSKI_RADIUS = 0.5
VARIANTS = ('a', 'b', 'classical')
ABEL_SLACK = 1e-12
CERTIFICATE_SLACK = 1e-12


def sfunc(x: float) -> float:
    """S(x) = 1 − √(1 − x) on [0, 1]."""
    x = validate_real(x, "x", 0.0, 1.0)
    return x / (1.0 + math.sqrt(1.0 - x))


def _s_values(x: np.ndarray) -> np.ndarray:
    """
    S on arrays, extended by 1 − √(1 − x) below 0 and clipped to S(1) = 1
    above 1 (matrix inputs can push p(n) past 1).
    """
    x = np.minimum(x, 1.0)
    return x / (1.0 + np.sqrt(1.0 - x))


def milne_check(x: Sequence[float], y: Sequence[float], slack: float = SLACK_CLOSED) -> VerificationReport:
    """
    (Σ x_k y_k)² ≤ Σ(x_k² + y_k²) · Σ x_k²y_k²/(x_k² + y_k²) ≤ Σ x_k² · Σ y_k².

    Margins are relative to max(1, Σx_k²·Σy_k²).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or x.size == 0:
        raise ValidationError(f"x and y must be non-empty vectors of equal length, got {x.shape} and {y.shape}", field="y")
    squares = x * x + y * y
    if np.any(squares == 0):
        raise ValidationError(f"|x_k| + |y_k| must be nonzero, zero pair at k = {int(np.argmin(squares))}", field="x")

    left = float(np.sum(x * y)) ** 2
    middle = float(np.sum(squares) * np.sum(x * x * y * y / squares))
    right = float(np.sum(x * x) * np.sum(y * y))
    scale = max(1.0, right)

    report = VerificationReport('milne', slack=slack, grid={'k': x.size})
    report.record((middle - left) / scale, location="cauchy<=milne")
    report.record((right - middle) / scale, location="milne<=product")
    report.details.update({'left': left, 'middle': middle, 'right': right})
    return report


def _require_polynomial(f: MatrixPowerSeries) -> None:
    if not f.exact:
        raise ValidationError("Only polynomial (exact) series are accepted here", field="f")


def _padded(f: MatrixPowerSeries, length: int) -> np.ndarray:
    out = np.zeros((max(length, f.degree + 1), f.dim, f.dim), dtype=np.complex128)
    out[:f.degree + 1] = f.coeffs
    return out


def _rotated(coeffs: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """A_m e^{imt} for every t; shape (len(ts), M, d, d)."""
    phases = np.exp(1j * np.outer(ts, np.arange(coeffs.shape[0])))
    return phases[:, :, None, None] * coeffs[None]


def _norms(stack: np.ndarray, tol: float) -> np.ndarray:
    d = stack.shape[-1]
    flat = stack.reshape(-1, d, d)
    return operator_norms(flat, tol=tol).reshape(stack.shape[:-2])


def window_profile(f: MatrixPowerSeries, ts: np.ndarray, N: int, tol: float = DEFAULT_TOL) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    p(n) and q(n) for n = 0..N at every angle, plus the R_l norms.

    Returns:
        (p, q, r_norms) with shapes (T, N+1), (T, N+1), (T, N+1)
    """
    D = f.degree
    coeffs = _padded(f, D + N + 2)
    rotated = _rotated(coeffs, ts)
    T = ts.size

    r_norms = _norms(np.cumsum(rotated[:, :N + 1], axis=1), tol)
    ratio = (1.0 - r_norms ** 2) / (1.0 + r_norms ** 2)
    q = np.cumsum(ratio, axis=1) / np.arange(1, N + 2)

    p = np.zeros((T, N + 1))
    if D == 0:
        return p, q, r_norms
    for n in range(N + 1):
        # ‖T_l‖ = ‖Σ_{m≤n} A_{m+l} e^{i(m+l)t}‖: a common phase does not change the norm
        windows = np.stack([np.sum(rotated[:, l:l + n + 1], axis=1) for l in range(1, D + 1)], axis=1)
        p[:, n] = np.sum(_norms(windows, tol) ** 2, axis=1) / (n + 1)
    return p, q, r_norms


@dataclass(frozen=True)
class RogosinskiTerms:
    """Rotated partial sums and the p(n), q(n) weights at one angle."""
    t: float
    n: int
    R: np.ndarray  # (n+1, d, d): R_0..R_n
    T_sq_sum: float
    H: np.ndarray  # (n+1, d, d): H_0..H_n
    p_n: float
    q_n: float


def rogosinski_terms(f: MatrixPowerSeries, t: float, n: int, tol: float = DEFAULT_TOL) -> RogosinskiTerms:
    """R_l, H_n, p(n) and q(n) of a polynomial f at angle t."""
    _require_polynomial(f)
    n = validate_positive_int(n, "n", minimum=0)
    t = float(t)

    rotated = _rotated(_padded(f, n + 1), np.array([t]))[0]
    R = np.cumsum(rotated[:n + 1], axis=0)
    H = np.cumsum(R, axis=0)
    p, q, _ = window_profile(f, np.array([t]), n, tol)
    p_n = float(p[0, n])
    return RogosinskiTerms(t=t, n=n, R=R, T_sq_sum=p_n * (n + 1), H=H, p_n=p_n, q_n=float(q[0, n]))


def angle_grid(t_grid: int) -> np.ndarray:
    """t_j = 2πj/t_grid, j = 0..t_grid−1."""
    t_grid = validate_positive_int(t_grid, "t_grid")
    return 2 * np.pi * np.arange(t_grid) / t_grid


def parseval_sweep(
    f: MatrixPowerSeries,
    n_max: int,
    ts: Sequence[float],
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """
    Σ_{l≤n} ‖R_l‖² + Σ_{l≥1} ‖T_l‖² ≤ n + 1 for every n ≤ n_max and every t.

    Asserted for scalar f. For d ≥ 2 the report is a finding only: the
    coefficient identity behind it holds for Hilbert-space norms, not for
    the operator norm.
    """
    _require_polynomial(f)
    n_max = validate_positive_int(n_max, "n", minimum=0)
    ts = np.asarray(ts, dtype=float).reshape(-1)
    p, _, r_norms = window_profile(f, ts, n_max, tol)
    n = np.arange(n_max + 1)
    lhs = np.cumsum(r_norms ** 2, axis=1) + (n + 1) * p

    report = VerificationReport('parseval', slack=slack, grid={'t': ts.size, 'n': n_max}, asserted=f.dim == 1)
    fingerprint = coefficient_fingerprint(f)
    for j, k in np.ndindex(lhs.shape):
        report.record(k + 1 - lhs[j, k], fingerprint, f"t={ts[j]!r},n={k}")
    report.details['max_lhs_minus_bound'] = float(np.max(lhs - (n + 1)))
    return report


def parseval_bound_check(
    f: MatrixPowerSeries,
    t: float,
    n: int,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """The Parseval-type bound at a single angle t and order n."""
    n = validate_positive_int(n, "n", minimum=0)
    terms = rogosinski_terms(f, t, n, tol)
    lhs = float(np.sum(_norms(terms.R, tol) ** 2)) + terms.T_sq_sum

    report = VerificationReport('parseval', slack=slack, grid={'t': 1, 'n': n}, asserted=f.dim == 1)
    report.record(n + 1 - lhs, coefficient_fingerprint(f), f"t={terms.t!r},n={n}")
    report.details['lhs'] = lhs
    return report


def abel_sweep(
    f: MatrixPowerSeries,
    ts: Sequence[float],
    radii: Sequence[float],
    N: int,
    slack: float = ABEL_SLACK
) -> VerificationReport:
    """
    Σ_{n≤N} A_n e^{int} r^n
        = (1−r)² Σ_{n≤N−2} r^n H_n + (1−2r) r^{N−1} H_{N−1} + r^N H_N

    entrywise for every (t, r), with H_{−1} = H_{−2} = O. Margins are minus
    the largest entrywise residual.
    """
    _require_polynomial(f)
    N = validate_positive_int(N, "N", minimum=0)
    ts = np.asarray(ts, dtype=float).reshape(-1)
    rs = np.array([validate_real(r, "r", 0.0, 1.0) for r in radii])

    rotated = _rotated(_padded(f, N + 1), ts)[:, :N + 1]          # (T, N+1, d, d)
    H = np.cumsum(np.cumsum(rotated, axis=1), axis=1)
    powers = rs[:, None] ** np.arange(N + 1)[None, :]              # (R, N+1)

    lhs = np.einsum('tnij,rn->trij', rotated, powers)
    rhs = powers[None, :, N, None, None] * H[:, None, N]
    if N >= 1:
        weight = (1 - 2 * rs) * powers[:, N - 1]
        rhs = rhs + weight[None, :, None, None] * H[:, None, N - 1]
    if N >= 2:
        inner = np.einsum('tnij,rn->trij', H[:, :N - 1], powers[:, :N - 1])
        rhs = rhs + ((1 - rs) ** 2)[None, :, None, None] * inner

    residuals = np.max(np.abs(lhs - rhs), axis=(2, 3))              # (T, R)
    report = VerificationReport('abel', slack=slack, grid={'t': ts.size, 'r': rs.size, 'N': N})
    fingerprint = coefficient_fingerprint(f)
    for j, k in np.ndindex(residuals.shape):
        report.record(-residuals[j, k], fingerprint, f"t={ts[j]!r},r={rs[k]!r}")
    report.details['max_residual'] = float(np.max(residuals))
    return report


def abel_identity_check(
    f: MatrixPowerSeries,
    t: float,
    r: float,
    N: int,
    slack: float = ABEL_SLACK
) -> VerificationReport:
    """The summation-by-parts identity at one (t, r)."""
    return abel_sweep(f, [float(t)], [r], N, slack)


def _correction(values: np.ndarray, N: int, r: float) -> np.ndarray:
    """
    (1−2r) r^{N−1} N S(x(N−1)) + (1−r)² Σ_{n≤N−2} r^n (n+1) S(x(n)) + r^N (N+1) S(x(N))

    for x = p or q given as an array of shape (T, N+1).
    """
    s = _s_values(values)
    total = (1 - 2 * r) * r ** (N - 1) * N * s[:, N - 1] + r ** N * (N + 1) * s[:, N]
    if N >= 2:
        n = np.arange(N - 1)
        total = total + (1 - r) ** 2 * np.sum(r ** n * (n + 1) * s[:, :N - 1], axis=1)
    return total


def rogosinski_sweep(
    f: MatrixPowerSeries,
    N: int,
    radii: Sequence[float],
    variant: str = 'a',
    t_grid: int = 256,
    coupled: bool = True,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """
    Refined Rogosinski inequality at |z| = r ≤ 1/2 over a grid of angles,
    for every r in radii.

    Variant a weights with S(p(n)), variant b with S(q(n)), classical drops
    the S-terms. Coupled sweeps take z = re^{it} with the same t as the
    weights; the uncoupled sweep pairs the worst z-angle with the worst
    weight-angle and is reported under "<id>-uncoupled" as a finding.
    Matrix inputs (d ≥ 2) are findings as well: the weights rest on the
    same coefficient identity as parseval_sweep.

    Args:
        f: Certified unit-ball polynomial
        N: Partial-sum order (>= 1)
        radii: Radii in [0, 1/2]
        variant: 'a', 'b' or 'classical'
        t_grid: Number of angles
        coupled: Tie the weight angle to arg z

    Returns:
        VerificationReport with margins 1 − LHS
    """
    _require_polynomial(f)
    if f.norm_bound is None or f.norm_bound > 1.0 + CERTIFICATE_SLACK:
        raise ValidationError(f"Input must carry a certified bound <= 1, got {f.norm_bound}", field="norm_bound")
    N = validate_positive_int(N, "N")
    rs = [validate_real(r, "r", 0.0, ROGOSINSKI_RADIUS) for r in radii]
    validate_choice(variant, VARIANTS, "variant")
    ts = angle_grid(t_grid)

    weights = None
    if variant != 'classical':
        p, q, _ = window_profile(f, ts, N, tol)
        weights = p if variant == 'a' else q
        if np.any(weights > 1.0) or np.any(weights < 0.0):
            logger.debug("Weights outside [0, 1] for %s (dim %d)", coefficient_fingerprint(f), f.dim)

    partial = MatrixPowerSeries(_padded(f, N + 1)[:N + 1], exact=True)
    inequality_id = f"rogosinski-{variant}" + ("" if coupled else "-uncoupled")
    report = VerificationReport(
        inequality_id,
        slack=slack,
        grid={'t': t_grid, 'r': len(rs), 'N': N},
        asserted=coupled and f.dim == 1,
    )
    fingerprint = coefficient_fingerprint(f)

    max_lhs = -np.inf
    for r in rs:
        sum_norms = _norms(evaluate_many(partial, r * np.exp(1j * ts)), tol)
        correction = np.zeros(ts.size) if weights is None else _correction(weights, N, r)
        if coupled:
            lhs = sum_norms + correction
            for j in range(ts.size):
                report.record(1.0 - lhs[j], fingerprint, f"t={ts[j]!r},r={r!r}")
            max_lhs = max(max_lhs, float(np.max(lhs)))
        else:
            lhs = float(np.max(sum_norms) + np.max(correction))
            report.record(1.0 - lhs, fingerprint, f"r={r!r}")
            max_lhs = max(max_lhs, lhs)
    report.details['max_lhs'] = max_lhs
    return report


def rogosinski_check(
    f: MatrixPowerSeries,
    N: int,
    r: float,
    variant: str = 'a',
    t_grid: int = 256,
    coupled: bool = True,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Refined Rogosinski inequality at a single radius r ≤ 1/2."""
    return rogosinski_sweep(f, N, [r], variant, t_grid, coupled, slack, tol)
