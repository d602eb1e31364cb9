"""
BOHRKIT Radii Module

Radius constants, per-function and family Bohr radii, the convexity
constant, bound chains and the L^q witness.
"""

from .constants import psi, rstar, xi_argmin, xi_objective, xi_p
from .bohr_radius import (
    RadiusEstimate,
    RadiusParams,
    RadiusProfile,
    bohr_functional,
    family_radius_inf,
    family_radius_profile,
    function_radius,
    monotone_extension_check,
    radius_from_norms,
    radius_profile,
    profile_ordering_check,
)
from .convexity import CONVENTIONS, ConvexityEstimate, NormedSpace, estimate_A_pN, tuple_lambda_max
from .chains import check_bound_chains, complex_reference_estimates, h_p, known_lower_bounds
from .lq_witness import lq_witness, lq_witness_radius, lq_witness_sup

__all__ = [
    'psi', 'rstar', 'xi_argmin', 'xi_objective', 'xi_p',
    'RadiusEstimate', 'RadiusParams', 'RadiusProfile', 'bohr_functional', 'family_radius_inf',
    'family_radius_profile', 'function_radius', 'monotone_extension_check', 'radius_from_norms',
    'radius_profile', 'profile_ordering_check',
    'CONVENTIONS', 'ConvexityEstimate', 'NormedSpace', 'estimate_A_pN', 'tuple_lambda_max',
    'check_bound_chains', 'complex_reference_estimates', 'h_p', 'known_lower_bounds',
    'lq_witness', 'lq_witness_radius', 'lq_witness_sup',
]
