"""
BOHRKIT Series Module

Matrix-coefficient power series and the test-function families built on them.
"""

from .power_series import (
    MatrixPowerSeries,
    SchwarzSeries,
    add,
    boundary_sup_estimate,
    cauchy_product,
    coefficient_fingerprint,
    compose,
    evaluate,
    evaluate_many,
    majorant,
    normalize_to_unit_ball,
    pad,
    rotate_coefficients,
    rotation_average,
    scale,
    shift,
    tensor_identity,
)
from .families import (
    FAMILIES,
    FamilySpec,
    blaschke_series,
    generate_family,
    mobius_series,
    random_blaschke,
    random_polynomial,
    random_schwarz,
    random_zeros,
    subordinate_operator_function,
)

__all__ = [
    'MatrixPowerSeries', 'SchwarzSeries', 'add', 'boundary_sup_estimate', 'cauchy_product',
    'coefficient_fingerprint', 'compose', 'evaluate', 'evaluate_many', 'majorant',
    'normalize_to_unit_ball', 'pad', 'rotate_coefficients', 'rotation_average', 'scale',
    'shift', 'tensor_identity',
    'FAMILIES', 'FamilySpec', 'blaschke_series', 'generate_family', 'mobius_series',
    'random_blaschke', 'random_polynomial', 'random_schwarz', 'random_zeros',
    'subordinate_operator_function',
]
