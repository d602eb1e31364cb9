"""
BOHRKIT L^q Witness Module

For 1 ≤ p < q < ∞ the order-N radius of L^q(μ) vanishes. The witness
lives on two disjoint atoms, i.e. in ℓ_q²:

    f(z) = (a, (1 − a^q)^{1/q} z),   ‖f(z)‖_q^q = a^q + (1 − a^q)|z|^q ≤ 1

and its radius tends to 0 as a → 1⁻.
"""

import numpy as np

from .bohr_radius import RadiusEstimate, radius_from_norms
from .convexity import NormedSpace
from ...core.errors import ValidationError
from ...utils.validators import validate_positive_int, validate_real


def _validate(p: float, q: float, a: float):
    p = validate_real(p, "p", 1.0)
    q = validate_real(q, "q", 1.0)
    if not p < q:
        raise ValidationError(f"The witness needs p < q, got p = {p}, q = {q}", field="q")
    a = validate_real(a, "a", 0.0, 1.0, low_open=True, high_open=True)
    return p, q, a


def lq_witness_coefficients(q: float, a: float) -> np.ndarray:
    """Coefficient vectors x_0 = (a, 0), x_1 = (0, (1 − a^q)^{1/q}) in ℓ_q²."""
    return np.array([[a, 0.0], [0.0, (1.0 - a ** q) ** (1.0 / q)]], dtype=np.complex128)


def lq_witness(p: float, q: float, N: int, a: float) -> float:
    """
    Radius bound ((1 − a^p)/(1 − a^q)^{p/q})^{1/p} of the ℓ_q² witness.

    Only x_0 and x_1 are nonzero, so the bound does not depend on N ≥ 1.
    """
    p, q, a = _validate(p, q, a)
    validate_positive_int(N, "N")
    value = ((1.0 - a ** p) / (1.0 - a ** q) ** (p / q)) ** (1.0 / p)
    return min(1.0, value)


def lq_witness_radius(p: float, q: float, a: float, tol: float = 1e-12) -> RadiusEstimate:
    """The same radius recomputed by bisection on the witness coefficient norms."""
    p, q, a = _validate(p, q, a)
    norms = NormedSpace('lq', q, 2).norm(lq_witness_coefficients(q, a))
    value = radius_from_norms(norms, p, tol)
    return RadiusEstimate(value, tol, 'witness_bound')


def lq_witness_sup(q: float, a: float, grid: int = 256) -> float:
    """max over a boundary grid of ‖f(e^{iθ})‖_q (equals 1 for every θ)."""
    coeffs = lq_witness_coefficients(q, a)
    zs = np.exp(2j * np.pi * np.arange(grid) / grid)
    values = coeffs[0][None, :] + zs[:, None] * coeffs[1][None, :]
    return float(np.max(NormedSpace('lq', q, 2).norm(values)))
