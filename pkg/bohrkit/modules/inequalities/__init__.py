"""
BOHRKIT Inequalities Module

Verifiers for the Bohr, refined Bohr and Rogosinski inequalities and the
lemmas and identities they rest on.
"""

from .bohr import (
    BOHR_RADIUS,
    RefinedBohrTerms,
    classical_bohr_check,
    default_r_grid,
    majorant_property_check,
    refined_bohr_check,
    refined_bohr_defect,
    refined_bohr_sweep,
    refined_bohr_terms,
    schwarz_bound,
    schwarz_majorant_check,
    subordination_majorant_check,
    wiener_check,
)
from .rogosinski import (
    ROGOSINSKI_RADIUS,
    VARIANTS,
    RogosinskiTerms,
    abel_identity_check,
    abel_sweep,
    angle_grid,
    milne_check,
    parseval_bound_check,
    parseval_sweep,
    rogosinski_check,
    rogosinski_sweep,
    rogosinski_terms,
    sfunc,
    window_profile,
)
from .suite import VERIFIERS, run_verification

__all__ = [
    'BOHR_RADIUS', 'RefinedBohrTerms', 'classical_bohr_check', 'default_r_grid',
    'majorant_property_check', 'refined_bohr_check', 'refined_bohr_defect', 'refined_bohr_sweep',
    'refined_bohr_terms', 'schwarz_bound', 'schwarz_majorant_check', 'subordination_majorant_check',
    'wiener_check',
    'ROGOSINSKI_RADIUS', 'VARIANTS', 'RogosinskiTerms', 'abel_identity_check', 'abel_sweep',
    'angle_grid', 'milne_check', 'parseval_bound_check', 'parseval_sweep', 'rogosinski_check',
    'rogosinski_sweep', 'rogosinski_terms', 'sfunc', 'window_profile',
    'VERIFIERS', 'run_verification',
]
