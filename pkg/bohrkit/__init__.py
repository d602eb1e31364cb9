"""
BOHRKIT - Bohr radius constants and inequality verification
Numerical checks for operator-valued Bohr, Rogosinski and majorant inequalities.
"""

__version__ = "1.0.0"
__author__ = "SmartStudent.ai"
__description__ = "Library and CLI computing Bohr-radius constants and verifying Bohr-type inequalities for matrix-valued bounded holomorphic functions."
