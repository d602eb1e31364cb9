"""
BOHRKIT Bound Chains Module

Consistency checks between estimates of A_{p,N}, R̃_{p,N} and r_p:

    R̃/(1+R̃^p)^{1/p} ≤ r_p ≤ R̃
    A^{1/p}/(2N) ≤ R̃ ≤ A^{1/p}
    A^{1/p}/(A+(2N)^p)^{1/p} ≤ r_p ≤ A^{1/p}

Sampled estimates are one-sided (they can only over-estimate the true
infima). A row L ≤ U that fails on the estimates is a real failure only
when L is exact; otherwise the violation is recorded as explained by
sampling and listed in the report details.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .bohr_radius import RadiusEstimate, RadiusParams, family_radius_inf
from .constants import xi_p
from .convexity import ConvexityEstimate
from ..series.families import FamilySpec
from ...core.reports import VerificationReport
from ...utils.logger import get_logger
from ...utils.validators import validate_positive_int, validate_real


logger = get_logger('bohrkit.radii')

CHAIN_SLACK = 2e-3


def h_p(t: float, p: float) -> float:
    """t/(1+t^p)^{1/p}, strictly increasing on t ≥ 0."""
    t = validate_real(t, "t", 0.0)
    return t / (1.0 + t ** p) ** (1.0 / p)


def known_lower_bounds(
    p: float,
    N: int,
    A: Optional[float] = None,
    R: Optional[float] = None,
    space: str = "C"
) -> Dict[str, float]:
    """
    Closed-form lower bounds on r_p implied by the available constants.

    Keys:
        complex_p: p/(p+2), for X = ℂ
        from_R: (1 + R̃^{-p})^{-1/p} = h_p(R̃)
        from_A: A^{1/p}/(A + (2N)^p)^{1/p}, for p ≥ 2
        from_A_p2: sqrt(A/(A + 4N²)), for p = 2
    """
    p = validate_real(p, "p", 1.0)
    N = validate_positive_int(N, "N")
    bounds: Dict[str, float] = {}
    if space == "C":
        bounds['complex_p'] = p / (p + 2.0)
    if R is not None:
        bounds['from_R'] = h_p(R, p)
    if A is not None and p >= 2.0:
        bounds['from_A'] = A ** (1.0 / p) / (A + (2.0 * N) ** p) ** (1.0 / p)
        if p == 2.0:
            bounds['from_A_p2'] = (A / (A + 4.0 * N * N)) ** 0.5
    return bounds


@dataclass(frozen=True)
class ChainRow:
    """One inequality lower ≤ upper evaluated on estimates."""
    name: str
    lower: float
    upper: float
    lower_exact: bool
    uses_A_above: bool = False  # A appears on the upper side

    @property
    def margin(self) -> float:
        return self.upper - self.lower


def _direction(exact: bool) -> str:
    return 'exact' if exact else 'upper'


def chain_rows(
    p: float,
    N: int,
    A_est: ConvexityEstimate,
    R_est: RadiusEstimate,
    rp_est: RadiusEstimate,
    space: str = "C"
) -> List[ChainRow]:
    """All rows checked by check_bound_chains."""
    A = A_est.lambda_upper
    R, rp = R_est.value, rp_est.value
    R_exact = R_est.kind == 'exact_scalar'
    rp_exact = rp_est.kind == 'exact_scalar'
    A_root = A ** (1.0 / p)
    bounds = known_lower_bounds(p, N, A, R, space)

    rows = [
        ChainRow('rp>=h_p(R)', bounds['from_R'], rp, R_exact),
        ChainRow('rp<=R', rp, R, rp_exact),
        ChainRow('R>=A^(1/p)/(2N)', A_root / (2 * N), R, False),
        ChainRow('R<=A^(1/p)', R, A_root, R_exact, uses_A_above=True),
        ChainRow('rp>=A^(1/p)/(A+(2N)^p)^(1/p)', bounds['from_A'], rp, False),
        ChainRow('rp<=A^(1/p)', rp, A_root, rp_exact, uses_A_above=True),
    ]
    if 'from_A_p2' in bounds:
        rows.append(ChainRow('rp>=sqrt(A/(A+4N^2))', bounds['from_A_p2'], rp, False))
    if 'complex_p' in bounds:
        rows.append(ChainRow('rp>=p/(p+2)', bounds['complex_p'], rp, True))
    return rows


def check_bound_chains(
    p: float,
    N: int,
    A_est: ConvexityEstimate,
    R_est: RadiusEstimate,
    rp_est: RadiusEstimate,
    slack: float = CHAIN_SLACK,
    space: str = "C"
) -> VerificationReport:
    """
    Check every chain row on the given estimates.

    A degenerate A (zero under common_phase) makes the rows with A on the
    upper side uninformative; they are listed in details and the report is
    flagged degenerate.
    """
    p = validate_real(p, "p", 2.0)
    N = validate_positive_int(N, "N")
    report = VerificationReport(
        'bound-chains',
        slack=slack,
        family=space,
        samples=A_est.samples,
        seed=A_est.seed,
        degenerate=A_est.degenerate,
    )
    report.details.update({
        'A': A_est.lambda_upper,
        'R': R_est.value,
        'r_p': rp_est.value,
        'A_direction': 'upper',
        'R_direction': _direction(R_est.kind == 'exact_scalar'),
        'r_p_direction': _direction(rp_est.kind == 'exact_scalar'),
        'phase_convention': A_est.phase_convention,
    })

    explained: List[str] = []
    for row in chain_rows(p, N, A_est, R_est, rp_est, space):
        report.details[row.name] = [row.lower, row.upper]
        if A_est.degenerate and row.uses_A_above:
            explained.append(f"{row.name}: degenerate A")
            continue
        if row.margin < -slack and not row.lower_exact:
            explained.append(f"{row.name}: sampled lower side ({row.margin!r})")
            continue
        report.record(row.margin, location=row.name)

    report.details['explained'] = explained
    if explained:
        logger.info("Bound chains: %d row(s) explained by sampling direction", len(explained))
    return report


def complex_reference_estimates(
    p: float,
    N: int,
    family: Optional[FamilySpec] = None,
    tol: float = 1e-12,
    workers: int = 1
) -> Tuple[RadiusEstimate, RadiusEstimate]:
    """
    (R̃_{p,N}(ℂ), r_p(ℂ)) estimates for the chain check.

    R̃_{p,1}(ℂ) = ξ_p exactly and r_p(ℂ) = 1 for p ≥ 2; otherwise both come
    from the sampled family as family_upper estimates.
    """
    p = validate_real(p, "p", 1.0)
    N = validate_positive_int(N, "N")
    family = family or FamilySpec('mobius', samples=200)

    if N == 1:
        R_est = RadiusEstimate(xi_p(p, tol), tol, 'exact_scalar')
    else:
        R_est = family_radius_inf(family, RadiusParams(p, N, tol), workers)

    if p >= 2.0:
        rp_est = RadiusEstimate(1.0, 0.0, 'exact_scalar')
    else:
        rp_est = family_radius_inf(family, RadiusParams(p, family.degree, tol), workers)
    return R_est, rp_est
