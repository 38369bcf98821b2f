"""Exact arithmetic for dynamical degrees of plane birational maps.

Core entry points: orbit data and matrices (jonquieres), certified root
isolation (algebraic), unit-circle censuses (census), residue arithmetic at
the dominant root (residues), reflection-group membership (weyl), ordered
spectrum enumeration (spectrum) and the cuspidal-cubic realization checks
(realization).  The command line lives in salemforge.cli.
"""

from .algebraic import AlgebraicReal, RationalInterval, compare, isolate_largest_real_root, refine
from .census import UnitCircleCensus, unit_circle_census
from .jonquieres import OrbitData, auxiliary_polynomial, jonquieres_matrix, verify_structure
from .realization import RealizationPlan, verify_realization
from .residues import ResidueContext, ResidueElement, residue_is_zero, residue_sign
from .spectrum import SpectrumEntry, SpectrumKey, dynamical_degree, enumerate_level_prefix
from .weyl import is_weyl_member, reduce as weyl_reduce

__all__ = [
    "AlgebraicReal",
    "OrbitData",
    "RationalInterval",
    "RealizationPlan",
    "ResidueContext",
    "ResidueElement",
    "SpectrumEntry",
    "SpectrumKey",
    "UnitCircleCensus",
    "auxiliary_polynomial",
    "compare",
    "dynamical_degree",
    "enumerate_level_prefix",
    "is_weyl_member",
    "isolate_largest_real_root",
    "jonquieres_matrix",
    "refine",
    "residue_is_zero",
    "residue_sign",
    "unit_circle_census",
    "verify_realization",
    "verify_structure",
    "weyl_reduce",
]
