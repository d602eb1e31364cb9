"""
BOHRKIT Verification Suite

Runs one `verify` target over a seeded family: every sample produces a
list of reports, and reports of the same inequality are merged in
first-seen order. Results never depend on the worker count.
"""

from typing import Callable, Dict, List, Optional, Sequence

from ..series.families import ALPHA_RADIUS, FamilySpec, random_schwarz, random_zeros
from ..series.power_series import SchwarzSeries
from .bohr import (
    BOHR_RADIUS,
    classical_bohr_check,
    default_r_grid,
    majorant_property_check,
    refined_bohr_sweep,
    schwarz_majorant_check,
    subordination_majorant_check,
    wiener_check,
)
from .rogosinski import (
    ROGOSINSKI_RADIUS,
    abel_sweep,
    angle_grid,
    milne_check,
    parseval_sweep,
    rogosinski_sweep,
)
from ...core.errors import ValidationError
from ...core.reports import VerificationReport, merge_reports
from ...core.run_config import RunConfig
from ...core.sweep import run_sweep
from ...utils.logger import get_logger
from ...utils.validators import validate_choice, validate_real


logger = get_logger('bohrkit.verify')

MILNE_LENGTH = 10
MAX_SCHWARZ_ZEROS = 3

Verifier = Callable[[RunConfig], List[VerificationReport]]


def _family_spec(cfg: RunConfig, default: str, scalar: bool, scalar_constant: bool = False) -> FamilySpec:
    return FamilySpec(
        name=cfg.family or default,
        samples=cfg.samples,
        seed=cfg.seed,
        dim=cfg.dim_for(scalar),
        degree=cfg.D,
        poly_degree=cfg.poly_degree,
        grid=cfg.boundary_grid,
        scalar_constant=scalar_constant,
    )


def _radii(cfg: RunConfig, r_max: float) -> List[float]:
    """--r when given, else r_grid equally spaced radii ending at r_max."""
    if cfg.r is not None:
        return [validate_real(cfg.r, "r", 0.0, r_max)]
    return [r_max * j / cfg.r_grid for j in range(1, cfg.r_grid + 1)]


def _collect(per_sample: Sequence[List[VerificationReport]], cfg: RunConfig, family: str) -> List[VerificationReport]:
    groups: Dict[str, List[VerificationReport]] = {}
    for reports in per_sample:
        for report in reports:
            groups.setdefault(report.inequality_id, []).append(report)

    merged = []
    for parts in groups.values():
        report = merge_reports(parts)
        report.family = family
        report.seed = cfg.seed
        report.samples = len(per_sample)
        merged.append(report)
    return merged


def _sweep(cfg: RunConfig, family: str, task) -> List[VerificationReport]:
    per_sample = run_sweep(task, cfg.samples, cfg.seed, cfg.workers)
    return _collect(per_sample, cfg, family)


def verify_bohr(cfg: RunConfig) -> List[VerificationReport]:
    """M_r(f) ≤ 1 at r ≤ 1/3 over a family with scalar A_0 (Möbius by default)."""
    spec = _family_spec(cfg, 'mobius', scalar=False, scalar_constant=True)
    slack = cfg.effective_slack(spec.name)
    radii = _radii(cfg, BOHR_RADIUS) if cfg.r is not None else [BOHR_RADIUS]

    def task(index, rng):
        f = spec.member(index, rng)
        return [classical_bohr_check(f, r, slack, cfg.tol) for r in radii]

    return _sweep(cfg, spec.name, task)


def _closed_form_psi(name: str) -> SchwarzSeries:
    return SchwarzSeries.identity() if name == 'z' else SchwarzSeries.power(2)


def verify_refined(cfg: RunConfig) -> List[VerificationReport]:
    """
    Refined Bohr inequality for f = ω_α∘ψ · I_d.

    psi z or z² with the given α is a single closed-form run (equality
    case). psi random, or family subordination, draws ψ per sample; the
    subordination family draws α too.
    """
    psi_name = cfg.psi or ('random' if cfg.family == 'subordination' else 'z')
    d = cfg.dim_for(scalar=False)
    radii = _radii(cfg, BOHR_RADIUS)

    if psi_name != 'random':
        if cfg.family not in (None, 'subordination'):
            raise ValidationError(f"refined runs on the subordination family, got {cfg.family}", field="family")
        _, report = refined_bohr_sweep(cfg.alpha, _closed_form_psi(psi_name), d, radii, cfg.D, cfg.effective_slack('mobius'), cfg.tol)
        report.family = f"psi={psi_name}"
        report.seed = cfg.seed
        return [report]

    draw_alpha = cfg.family == 'subordination'
    slack = cfg.effective_slack('subordination')

    def task(index, rng):
        alpha = complex(random_zeros(rng, 1, ALPHA_RADIUS)[0]) if draw_alpha else cfg.alpha
        psi = random_schwarz(rng, int(rng.integers(0, MAX_SCHWARZ_ZEROS + 1)), max(cfg.D, 1))
        _, report = refined_bohr_sweep(alpha, psi, d, radii, cfg.D, slack, cfg.tol)
        return [report]

    return _sweep(cfg, 'subordination', task)


def verify_rogosinski(cfg: RunConfig, variant: str) -> List[VerificationReport]:
    """Refined Rogosinski inequality over polynomials, every N in the grid and r ≤ 1/2."""
    spec = _family_spec(cfg, 'poly_random', scalar=True)
    slack = cfg.effective_slack(spec.name)
    radii = _radii(cfg, ROGOSINSKI_RADIUS)
    modes = (True, False) if cfg.uncoupled else (True,)

    def task(index, rng):
        f = spec.member(index, rng)
        return [
            rogosinski_sweep(f, N, radii, variant, cfg.t_grid, coupled, slack, cfg.tol)
            for N in cfg.N_grid
            for coupled in modes
        ]

    return _sweep(cfg, spec.name, task)


def verify_subordination(cfg: RunConfig) -> List[VerificationReport]:
    """M_r(g∘φ) ≤ M_r(g) for random Schwarz φ and r ≤ 1/3."""
    spec = _family_spec(cfg, 'poly_random', scalar=False)
    slack = cfg.effective_slack(spec.name)
    radii = _radii(cfg, BOHR_RADIUS) if cfg.r is not None else [BOHR_RADIUS]

    def task(index, rng):
        g = spec.member(index, rng)
        phi = random_schwarz(rng, int(rng.integers(0, MAX_SCHWARZ_ZEROS + 1)), max(cfg.D, 1))
        return [subordination_majorant_check(g, phi, r, cfg.D, slack, cfg.tol) for r in radii]

    return _sweep(cfg, spec.name, task)


def verify_wiener(cfg: RunConfig) -> List[VerificationReport]:
    """|a_n| ≤ 1 − |a_0|² on scalar members (Blaschke products by default)."""
    spec = _family_spec(cfg, 'blaschke', scalar=True)
    if spec.dim != 1:
        raise ValidationError(f"wiener runs on scalar functions, got d = {spec.dim}", field="d")
    slack = cfg.effective_slack(spec.name)
    return _sweep(cfg, spec.name, lambda index, rng: [wiener_check(spec.member(index, rng), slack)])


def verify_majorant(cfg: RunConfig) -> List[VerificationReport]:
    """Algebraic laws of M_r on pairs of family members."""
    spec = _family_spec(cfg, 'poly_random', scalar=False)
    slack = cfg.effective_slack('poly_random')
    rs = default_r_grid(cfg.r_grid)

    def task(index, rng):
        f = spec.member(index, rng)
        g = spec.member(index, rng)
        return [majorant_property_check(f, g, rs, slack=slack, tol=cfg.tol)]

    return _sweep(cfg, spec.name, task)


def verify_parseval(cfg: RunConfig) -> List[VerificationReport]:
    """Parseval-type bound at every angle and every order up to each N."""
    spec = _family_spec(cfg, 'poly_random', scalar=True)
    slack = cfg.effective_slack(spec.name)
    ts = angle_grid(cfg.t_grid)
    n_max = max(cfg.N_grid)

    def task(index, rng):
        return [parseval_sweep(spec.member(index, rng), n_max, ts, slack, cfg.tol)]

    return _sweep(cfg, spec.name, task)


def verify_abel(cfg: RunConfig) -> List[VerificationReport]:
    """Summation-by-parts identity for H_n over angles, radii and every N."""
    spec = _family_spec(cfg, 'poly_random', scalar=True)
    ts = angle_grid(cfg.t_grid)
    radii = _radii(cfg, ROGOSINSKI_RADIUS)

    def task(index, rng):
        f = spec.member(index, rng)
        return [abel_sweep(f, ts, radii, N) for N in cfg.N_grid]

    return _sweep(cfg, spec.name, task)


def verify_milne(cfg: RunConfig) -> List[VerificationReport]:
    """Milne's inequality on Gaussian vectors."""
    slack = cfg.effective_slack('poly_random')

    def task(index, rng):
        x = rng.standard_normal(MILNE_LENGTH)
        y = rng.standard_normal(MILNE_LENGTH)
        return [milne_check(x, y, slack)]

    return _sweep(cfg, 'gaussian', task)


def verify_schwarz(cfg: RunConfig) -> List[VerificationReport]:
    """Σ|b_k| r^k ≤ r·G for random Schwarz functions at radii up to 1/3."""
    slack = cfg.effective_slack('subordination')
    radii = _radii(cfg, BOHR_RADIUS)

    def task(index, rng):
        psi = random_schwarz(rng, int(rng.integers(0, MAX_SCHWARZ_ZEROS + 1)), max(cfg.D, 1))
        return [schwarz_majorant_check(psi, r, slack) for r in radii]

    return _sweep(cfg, 'schwarz', task)


VERIFIERS: Dict[str, Verifier] = {
    'bohr': verify_bohr,
    'refined': verify_refined,
    'rogosinski-a': lambda cfg: verify_rogosinski(cfg, 'a'),
    'rogosinski-b': lambda cfg: verify_rogosinski(cfg, 'b'),
    'rogosinski-classical': lambda cfg: verify_rogosinski(cfg, 'classical'),
    'subordination': verify_subordination,
    'wiener': verify_wiener,
    'majorant': verify_majorant,
    'parseval': verify_parseval,
    'abel': verify_abel,
    'milne': verify_milne,
    'schwarz': verify_schwarz,
}


def run_verification(cfg: RunConfig, target: Optional[str] = None) -> List[VerificationReport]:
    """
    Run a verify target.

    Args:
        cfg: Validated run configuration
        target: Overrides cfg.target

    Returns:
        Merged reports, one per inequality id
    """
    target = target or cfg.target
    validate_choice(target, tuple(VERIFIERS), "target")
    logger.info("verify %s: family=%s samples=%d seed=%d", target, cfg.family, cfg.samples, cfg.seed)
    reports = VERIFIERS[target](cfg)
    for report in reports:
        logger.info("%s: min_margin=%r status=%s", report.inequality_id, report.min_margin, report.status)
    return reports
