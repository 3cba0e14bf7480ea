"""Exact tools for tiles and spectral sets on Z and Z_n.

The package answers, with integer arithmetic only, questions of the shape
"does this finite set tile", "is this a spectrum for it", and "what do the
cyclotomic divisors of its mask polynomial say about either".  The main
entry points re-exported here:

* ``analyze`` and friends: structure conditions on a finite integer set,
  plus the constructive spectrum and tiling set they guarantee.
* ``is_tiling_z`` / ``is_spectrum_z`` / ``is_tiling_zn`` /
  ``is_spectral_pair_zn``: certified checks.
* ``find_spectrum_zn`` / ``find_tiling_complement_zn`` / ``survey``:
  exhaustive searches on cyclic groups.
* ``decompose_mod_k`` / ``lift_block`` and the step-set machinery: the
  passages between Z_n, Z, and measure-one step sets of the line.
"""

from .cm import (
    CmAnalysis,
    PrimePower,
    RationalSpectrum,
    TilingSet,
    analyze,
    cm_tiling_set,
    laba_spectrum,
    minimal_period,
)
from .errors import (
    BadPartitionError,
    CardinalityMismatchError,
    CeilingExceededError,
    EmptySetError,
    EmptySpectrumError,
    InvalidIndexError,
    ModulusMismatchError,
    NonBinaryCoefficientsError,
    NotPTileError,
    SpectileError,
    ZeroDivisorError,
)
from .kernels import BACKEND
from .lift import (
    ModKDecomposition,
    assemble_spectrum_mod_k,
    decompose_mod_k,
    lift_block,
    periodize_complement,
)
from .poly import IntPoly, IntSet, cyclotomic, mask_polynomial, vanishes_at_root_of_unity
from .search import (
    FourierZeroSet,
    SurveyAccumulator,
    SurveySummary,
    ZnClassification,
    common_spectrum,
    common_tiling_set,
    find_spectrum_zn,
    find_tiling_complement_zn,
    fourier_zero_set,
    summarize,
    survey,
)
from .stepset import (
    FiberDecomposition,
    StepSet,
    assemble_omega,
    from_int_set,
    multiplicity_profile,
    verify_fiber_spectrum,
)
from .verify import (
    Certificate,
    ZnSubset,
    is_spectral_pair_zn,
    is_spectrum_z,
    is_tiling_z,
    is_tiling_zn,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadPartitionError",
    "CardinalityMismatchError",
    "CeilingExceededError",
    "Certificate",
    "CmAnalysis",
    "EmptySetError",
    "EmptySpectrumError",
    "FiberDecomposition",
    "FourierZeroSet",
    "IntPoly",
    "IntSet",
    "InvalidIndexError",
    "ModKDecomposition",
    "ModulusMismatchError",
    "NonBinaryCoefficientsError",
    "NotPTileError",
    "PrimePower",
    "RationalSpectrum",
    "SpectileError",
    "StepSet",
    "SurveyAccumulator",
    "SurveySummary",
    "TilingSet",
    "ZeroDivisorError",
    "ZnClassification",
    "ZnSubset",
    "analyze",
    "assemble_omega",
    "assemble_spectrum_mod_k",
    "cm_tiling_set",
    "common_spectrum",
    "common_tiling_set",
    "cyclotomic",
    "decompose_mod_k",
    "find_spectrum_zn",
    "find_tiling_complement_zn",
    "fourier_zero_set",
    "from_int_set",
    "is_spectral_pair_zn",
    "is_spectrum_z",
    "is_tiling_z",
    "is_tiling_zn",
    "laba_spectrum",
    "lift_block",
    "mask_polynomial",
    "minimal_period",
    "multiplicity_profile",
    "periodize_complement",
    "summarize",
    "survey",
    "vanishes_at_root_of_unity",
    "verify_fiber_spectrum",
    "__version__",
]
