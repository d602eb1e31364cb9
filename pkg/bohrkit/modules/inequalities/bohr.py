"""
BOHRKIT Bohr Inequalities Module

Verifiers for the operator Bohr inequality, the subordination majorant
lemma, the refined Bohr inequality, the Schwarz coefficient lemma,
Wiener's coefficient bound and the algebraic laws of M_r.

Each verifier returns a VerificationReport whose margins are RHS − LHS.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..numerics.linalg import DEFAULT_TOL
from ..series.families import DEFAULT_DEGREE, subordinate_operator_function
from ..series.power_series import (
    MatrixPowerSeries,
    SchwarzSeries,
    add,
    cauchy_product,
    coefficient_fingerprint,
    compose,
    majorant,
    scale,
    shift,
)
from ...core.errors import ValidationError
from ...core.reports import SLACK_CLOSED, SLACK_RANDOM, VerificationReport
from ...utils.logger import get_logger
from ...utils.validators import validate_open_disk, validate_positive_int, validate_real


logger = get_logger('bohrkit.inequalities')

BOHR_RADIUS = 1.0 / 3.0
CERTIFICATE_SLACK = 1e-12


def _require_certified(f: MatrixPowerSeries) -> None:
    if f.norm_bound is None or f.norm_bound > 1.0 + CERTIFICATE_SLACK:
        raise ValidationError(
            f"Input must carry a certified bound <= 1, got {f.norm_bound}",
            field="norm_bound"
        )


def _bohr_r(r: float) -> float:
    return validate_real(r, "r", 0.0, BOHR_RADIUS)


def classical_bohr_check(
    f: MatrixPowerSeries,
    r: float = BOHR_RADIUS,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """
    M_r(f) ≤ 1 for certified ‖f‖ ≤ 1 with A_0 = a_0·I and r ≤ 1/3.
    """
    _require_certified(f)
    if not f.is_scalar_constant_term():
        raise ValidationError("A_0 must be a scalar multiple of I", field="coeffs")
    r = _bohr_r(r)

    value = majorant(f, r, tol)
    report = VerificationReport('bohr', slack=slack, grid={'r': 1})
    report.record(1.0 - value, coefficient_fingerprint(f), f"r={r!r}")
    report.details['majorant'] = value
    return report


def subordination_majorant_check(
    g: MatrixPowerSeries,
    phi: SchwarzSeries,
    r: float = BOHR_RADIUS,
    D_out: Optional[int] = None,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """M_r(g∘φ) ≤ M_r(g) for a Schwarz function φ and r ≤ 1/3."""
    r = _bohr_r(r)
    f = compose(g, phi, g.degree if D_out is None else D_out)

    m_f, m_g = majorant(f, r, tol), majorant(g, r, tol)
    report = VerificationReport('subordination', slack=slack, grid={'r': 1})
    report.record(m_g - m_f, coefficient_fingerprint(f), f"r={r!r}")
    report.details.update({'majorant_f': m_f, 'majorant_g': m_g})
    return report


@dataclass(frozen=True)
class RefinedBohrTerms:
    """Terms of the refined Bohr inequality at one radius."""
    alpha: complex
    beta: float
    G: float
    sum_majorant: float
    term2: float
    term3: float
    lhs: float
    r: float = BOHR_RADIUS

    @property
    def defect(self) -> float:
        """Ψ(r) = term2 + term3."""
        return self.term2 + self.term3


def schwarz_bound(beta: float, r: float) -> float:
    """G = β + r(1 − β²)/(1 − rβ)."""
    return beta + r * (1.0 - beta * beta) / (1.0 - r * beta)


def _defect_terms(a: float, r: float, G: float):
    denominator = 1.0 - r * a * G
    if not denominator > 0:
        raise ValidationError(f"1 - r|alpha|G must be positive, got {denominator}", field="r")
    term2 = (1.0 - a) * (1.0 - r * (1.0 + 2.0 * a)) / (1.0 - r * a)
    term3 = r * (1.0 - a * a) * (1.0 - G) / ((1.0 - r * a) * denominator)
    return term2, term3


def refined_bohr_defect(alpha: complex, r: float, beta: float) -> float:
    """
    Ψ(r) = (1−|α|)(1−r(1+2|α|))/(1−r|α|) + r(1−|α|²)(1−G)/((1−r|α|)(1−r|α|G)).

    Nonnegative for r ≤ 1/3, since then G ≤ 1.
    """
    r = _bohr_r(r)
    beta = validate_real(beta, "beta", 0.0, 1.0 + CERTIFICATE_SLACK)
    term2, term3 = _defect_terms(abs(complex(alpha)), r, schwarz_bound(beta, r))
    return term2 + term3


def refined_bohr_terms(f: MatrixPowerSeries, alpha: complex, r: float, tol: float = DEFAULT_TOL) -> RefinedBohrTerms:
    """Evaluate every term of the refined inequality for f with A_0 = αI."""
    return _terms_from_norms(f.coefficient_norms(tol), validate_open_disk(alpha, "alpha"), _bohr_r(r))


def _terms_from_norms(norms: np.ndarray, alpha: complex, r: float) -> RefinedBohrTerms:
    a = abs(alpha)
    beta = float(norms[1]) / (1.0 - a * a) if norms.size > 1 else 0.0
    G = schwarz_bound(beta, r)
    term2, term3 = _defect_terms(a, r, G)
    sum_majorant = float(np.sum(norms * r ** np.arange(norms.size)))
    return RefinedBohrTerms(
        alpha=alpha,
        beta=beta,
        G=G,
        sum_majorant=sum_majorant,
        term2=term2,
        term3=term3,
        lhs=sum_majorant + term2 + term3,
        r=r,
    )


def refined_bohr_sweep(
    alpha: complex,
    psi: SchwarzSeries,
    d: int = 1,
    radii: Sequence[float] = (BOHR_RADIUS,),
    D: int = DEFAULT_DEGREE,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> Tuple[List[RefinedBohrTerms], VerificationReport]:
    """
    Refined Bohr inequality for f = αI − (1−|α|²) Σ ᾱ^{n−1} ψ^n · I_d at
    every radius in radii (each ≤ 1/3).

    Returns:
        (terms per radius, one VerificationReport with margins 1 − lhs)
    """
    if psi.is_zero():
        raise ValidationError("f is constant (psi = 0); the inequality needs a non-constant f", field="psi")
    alpha = validate_open_disk(alpha, "alpha")
    f = subordinate_operator_function(alpha, psi, d, D)
    norms = f.coefficient_norms(tol)
    fingerprint = coefficient_fingerprint(psi)

    report = VerificationReport('refined', slack=slack, grid={'r': len(radii)})
    all_terms = []
    for r in radii:
        terms = _terms_from_norms(norms, alpha, _bohr_r(r))
        report.record(1.0 - terms.lhs, fingerprint, f"alpha={alpha!r},r={terms.r!r}")
        all_terms.append(terms)

    worst = max(all_terms, key=lambda t: t.lhs)
    report.details.update({
        'lhs': worst.lhs,
        'sum_majorant': worst.sum_majorant,
        'term2': worst.term2,
        'term3': worst.term3,
        'beta': worst.beta,
        'G': worst.G,
        'r': worst.r,
    })
    return all_terms, report


def refined_bohr_check(
    alpha: complex,
    psi: SchwarzSeries,
    d: int = 1,
    r: float = BOHR_RADIUS,
    D: int = DEFAULT_DEGREE,
    slack: float = SLACK_CLOSED,
    tol: float = DEFAULT_TOL
) -> Tuple[RefinedBohrTerms, VerificationReport]:
    """
    Refined Bohr inequality at one radius r ≤ 1/3.

    Returns:
        (RefinedBohrTerms, VerificationReport)
    """
    all_terms, report = refined_bohr_sweep(alpha, psi, d, [r], D, slack, tol)
    return all_terms[0], report


def schwarz_majorant_check(
    psi: SchwarzSeries,
    r: float = BOHR_RADIUS,
    slack: float = SLACK_RANDOM
) -> VerificationReport:
    """Σ_{k≥1} |b_k| r^k ≤ r·G with β = |b_1|, for r ≤ 1/3."""
    r = _bohr_r(r)
    b = np.abs(psi.coeffs[:, 0, 0])
    beta = float(b[1]) if psi.degree >= 1 else 0.0
    total = float(np.sum(b * r ** np.arange(psi.degree + 1)))
    bound = r * schwarz_bound(beta, r)

    report = VerificationReport('schwarz-majorant', slack=slack, grid={'r': 1})
    report.record(bound - total, coefficient_fingerprint(psi), f"r={r!r}")
    report.details.update({'sum': total, 'bound': bound})
    return report


def wiener_check(f: MatrixPowerSeries, slack: float = SLACK_CLOSED) -> VerificationReport:
    """|a_n| ≤ 1 − |a_0|² for 1 ≤ n ≤ D, scalar certified f."""
    _require_certified(f)
    if f.dim != 1:
        raise ValidationError(f"Wiener's bound is checked for scalar series, got dim {f.dim}", field="dim")

    a = np.abs(f.coeffs[:, 0, 0])
    bound = 1.0 - a[0] ** 2
    report = VerificationReport('wiener', slack=slack, grid={'n': f.degree})
    fingerprint = coefficient_fingerprint(f)
    for n in range(1, f.degree + 1):
        report.record(bound - a[n], fingerprint, f"n={n}")
    report.details['bound'] = float(bound)
    return report


def _majorant_curve(f: MatrixPowerSeries, rs: np.ndarray, tol: float) -> np.ndarray:
    norms = f.coefficient_norms(tol)
    return np.sum(norms[None, :] * rs[:, None] ** np.arange(f.degree + 1)[None, :], axis=1)


def default_r_grid(points: int) -> np.ndarray:
    """points radii j/points, j = 0..points−1, all in [0, 1)."""
    points = validate_positive_int(points, "r_grid")
    return np.arange(points) / points


def majorant_property_check(
    f: MatrixPowerSeries,
    g: MatrixPowerSeries,
    r_grid: Optional[Sequence[float]] = None,
    c: complex = -0.6 + 0.3j,
    k: int = 3,
    slack: float = SLACK_RANDOM,
    tol: float = DEFAULT_TOL
) -> VerificationReport:
    """
    Subadditivity, submultiplicativity, homogeneity and the shift rule
    M_r(z^k f) = r^k M_r(f), checked over the r grid.
    """
    if f.dim != g.dim:
        raise ValidationError(f"Series dimension mismatch: {f.dim} vs {g.dim}", field="dim")
    rs = default_r_grid(16) if r_grid is None else np.asarray(r_grid, dtype=float)
    if rs.size == 0 or np.any(rs < 0) or np.any(rs >= 1):
        raise ValidationError("r_grid values must lie in [0, 1)", field="r_grid")

    m_f = _majorant_curve(f, rs, tol)
    m_g = _majorant_curve(g, rs, tol)
    m_sum = _majorant_curve(add(f, g), rs, tol)
    m_prod = _majorant_curve(cauchy_product(f, g, f.degree + g.degree), rs, tol)
    m_scaled = _majorant_curve(scale(f, c), rs, tol)
    m_shift = _majorant_curve(shift(f, k), rs, tol)

    report = VerificationReport('majorant', slack=slack, grid={'r': rs.size})
    fingerprint = coefficient_fingerprint(f)
    for j, r in enumerate(rs):
        report.record(m_f[j] + m_g[j] - m_sum[j], fingerprint, f"subadditive,r={r!r}")
        report.record(m_f[j] * m_g[j] - m_prod[j], fingerprint, f"submultiplicative,r={r!r}")
        report.record(-abs(m_scaled[j] - abs(c) * m_f[j]), fingerprint, f"homogeneous,r={r!r}")
        report.record(-abs(m_shift[j] - r ** k * m_f[j]), fingerprint, f"shift,r={r!r}")
    return report
