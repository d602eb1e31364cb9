"""
BOHRKIT Bohr Radius Module

The order-N p-Bohr functional Σ_{k≤N} ‖x_k‖^p r^{pk}, per-function radii
R̃_{p,N}(f) and sampled family infima.

A sampled infimum can only over-estimate the true family radius, so every
family estimate is labelled family_upper.
"""

from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from ..numerics.linalg import DEFAULT_TOL
from ..numerics.solvers import Bracket, bisect_root
from ..series.families import FamilySpec
from ..series.power_series import MatrixPowerSeries, coefficient_fingerprint
from ...core.errors import ValidationError
from ...core.reports import SLACK_CLOSED, VerificationReport
from ...core.sweep import run_sweep
from ...utils.logger import get_logger
from ...utils.validators import validate_choice, validate_nonnegative, validate_positive_int, validate_real


logger = get_logger('bohrkit.radii')

KINDS = ('exact_scalar', 'family_upper', 'witness_bound')

# A certified bound this close above 1 still counts as the unit ball.
CERTIFICATE_SLACK = 1e-12


@dataclass(frozen=True)
class RadiusParams:
    """Exponent p ≥ 1, order N ≥ 1 and bisection tolerance."""
    p: float
    N: int
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        validate_real(self.p, "p", 1.0)
        validate_positive_int(self.N, "N")
        validate_real(self.tol, "tol", 0.0, low_open=True)

    def with_order(self, N: int) -> 'RadiusParams':
        return RadiusParams(self.p, N, self.tol)


@dataclass(frozen=True)
class RadiusEstimate:
    """A computed radius with its bracketing error and provenance."""
    value: float
    bracket_width: float
    kind: str  # exact_scalar, family_upper, witness_bound
    samples: int = 1

    def __post_init__(self):
        validate_real(self.value, "value", 0.0, 1.0)
        validate_real(self.bracket_width, "bracket_width", 0.0)
        validate_choice(self.kind, KINDS, "kind")


@dataclass(frozen=True)
class RadiusProfile:
    """r_p (all coefficients) ≤ R̃_{p,N} (order N) ≤ r̃_p (order 1) for one function or family."""
    r_p: RadiusEstimate
    R_pN: RadiusEstimate
    r_tilde: RadiusEstimate


def bohr_functional(norms: Sequence[float], p: float, r: float) -> float:
    """Σ_{k=0}^{N} ‖x_k‖^p r^{pk} for norms = (‖x_0‖, …, ‖x_N‖)."""
    values = np.asarray(validate_nonnegative(norms, "norms"), dtype=float)
    p = validate_real(p, "p", 1.0)
    r = validate_real(r, "r", 0.0, 1.0)
    if values.size == 0:
        raise ValidationError("norms must not be empty", field="norms")
    weights = r ** (p * np.arange(values.size))
    return float(np.sum(values ** p * weights))


def _require_unit_certificate(f: MatrixPowerSeries) -> None:
    if f.norm_bound is None:
        raise ValidationError("The function carries no norm certificate", field="norm_bound")
    if f.norm_bound > 1.0 + CERTIFICATE_SLACK:
        raise ValidationError(f"The function is not certified in the unit ball: bound {f.norm_bound}", field="norm_bound")


def radius_from_norms(norms: Sequence[float], p: float, tol: float = DEFAULT_TOL) -> float:
    """
    Largest r ∈ [0, 1] with bohr_functional(norms, p, r) ≤ 1.

    The functional is nondecreasing in r, so bisection on F(r) − 1 finds it.
    """
    excess = lambda r: bohr_functional(norms, p, r) - 1.0
    if excess(1.0) <= 0.0:
        return 1.0
    if excess(0.0) >= 0.0:
        return 0.0
    return bisect_root(excess, Bracket(0.0, 1.0, tol))


def function_radius(f: MatrixPowerSeries, params: RadiusParams) -> RadiusEstimate:
    """
    Per-function radius R̃_{p,N}(f) for a certified unit-ball f.

    Coefficients past the stored degree count as zero. For a truncated
    series with N above its degree this over-estimates the radius.
    """
    _require_unit_certificate(f)
    if params.N > f.degree and not f.exact:
        logger.warning("Order %d exceeds the truncation degree %d; radius is an upper estimate", params.N, f.degree)

    norms = np.zeros(params.N + 1)
    stored = f.coefficient_norms(params.tol)[:params.N + 1]
    norms[:stored.size] = stored

    value = radius_from_norms(norms, params.p, params.tol)
    width = params.tol if 0.0 < value < 1.0 else 0.0
    return RadiusEstimate(value, width, 'exact_scalar')


def radius_profile(f: MatrixPowerSeries, params: RadiusParams) -> RadiusProfile:
    """Radii of f at order = degree, order N and order 1."""
    return RadiusProfile(
        r_p=function_radius(f, params.with_order(max(f.degree, 1))),
        R_pN=function_radius(f, params),
        r_tilde=function_radius(f, params.with_order(1)),
    )


Family = Union[FamilySpec, Sequence[MatrixPowerSeries]]


def _map_family(family: Family, task, workers: int) -> list:
    if isinstance(family, FamilySpec):
        return run_sweep(lambda i, rng: task(family.member(i, rng)), family.samples, family.seed, workers)
    members = list(family)
    if not members:
        raise ValidationError("The family is empty", field="family")
    return [task(f) for f in members]


def _infimum(estimates: List[RadiusEstimate]) -> RadiusEstimate:
    worst = min(estimates, key=lambda e: e.value)
    return RadiusEstimate(worst.value, worst.bracket_width, 'family_upper', samples=len(estimates))


def family_radius_inf(family: Family, params: RadiusParams, workers: int = 1) -> RadiusEstimate:
    """
    Minimum of function_radius over a sampled family.

    Args:
        family: FamilySpec, or an explicit sequence of certified series
        params: Radius parameters
        workers: Sweep threads (FamilySpec only)

    Returns:
        family_upper estimate of inf R̃_{p,N}(f)
    """
    estimates = _map_family(family, lambda f: function_radius(f, params), workers)
    result = _infimum(estimates)
    logger.info("Family radius (p=%g, N=%d): %.12g over %d samples", params.p, params.N, result.value, result.samples)
    return result


def family_radius_profile(family: Family, params: RadiusParams, workers: int = 1) -> RadiusProfile:
    """radius_profile minimised member-wise over one sampled family."""
    profiles = _map_family(family, lambda f: radius_profile(f, params), workers)
    return RadiusProfile(
        r_p=_infimum([pr.r_p for pr in profiles]),
        R_pN=_infimum([pr.R_pN for pr in profiles]),
        r_tilde=_infimum([pr.r_tilde for pr in profiles]),
    )


def profile_ordering_check(profile: RadiusProfile, slack: float = SLACK_CLOSED, family: str = "") -> VerificationReport:
    """r_p ≤ R̃_{p,N} ≤ r̃_p on estimates drawn from the same family."""
    report = VerificationReport('radius-ordering', slack=slack, family=family, samples=profile.R_pN.samples)
    report.record(profile.R_pN.value - profile.r_p.value, location="r_p<=R_pN")
    report.record(profile.r_tilde.value - profile.R_pN.value, location="R_pN<=r_tilde")
    report.details.update({
        'r_p': profile.r_p.value,
        'R_pN': profile.R_pN.value,
        'r_tilde': profile.r_tilde.value,
    })
    return report


def monotone_extension_check(f: MatrixPowerSeries, params: RadiusParams, slack: float = SLACK_CLOSED) -> VerificationReport:
    """Raising the order never increases the radius."""
    report = VerificationReport('radius-monotone', slack=slack, grid={'N': params.N})
    previous = 1.0
    for n in range(1, params.N + 1):
        value = function_radius(f, params.with_order(n)).value
        report.record(previous - value, coefficient_fingerprint(f), f"N={n}")
        previous = value
    return report
