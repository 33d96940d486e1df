"""Unimodular sequence sets with zero/low delay-Doppler ambiguity zones.

Construction of three polyphase families, exact integer-phase sequence
types, periodic ambiguity-surface evaluation, spectral-null and cyclic
distinctness certification, and the theoretical optimality bounds.
"""

from .core import (
    AmbiguitySurface,
    DelayDopplerZone,
    FrequencyDual,
    PhaseSequence,
    SequenceSet,
    cyclic_shift_ratio,
    load_set,
    save_set,
    set_from_dict,
    set_to_dict,
)
from .ambiguity import (
    SidelobeStats,
    af,
    af_surface,
    af_via_frequency,
    cf,
    dft,
    sidelobe_stats,
    verify_zcz,
    zero_tolerance,
)
from .constructions import (
    MappingPi,
    PermutationSigma,
    construct_a,
    construct_b,
    construct_c,
    exp_mapping,
    find_primitive_element,
    power_permutation,
    validate_mapping,
)
from .bounds import (
    OptimalityReport,
    Table2Row,
    closed_form_ratio,
    laz_lower_bound,
    optimality_report,
    rho_laz,
    table2,
    tfm_optimal,
    zaz_feasible,
    zaz_ratio,
)
from .analysis import (
    SpectralNullSet,
    certify,
    omega_for_b,
    spectral_tolerance,
    verify_comb_magnitude,
    verify_cyclically_distinct,
    verify_spectral_null,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguitySurface",
    "DelayDopplerZone",
    "FrequencyDual",
    "MappingPi",
    "OptimalityReport",
    "PermutationSigma",
    "PhaseSequence",
    "SequenceSet",
    "SidelobeStats",
    "SpectralNullSet",
    "Table2Row",
    "af",
    "af_surface",
    "af_via_frequency",
    "certify",
    "cf",
    "closed_form_ratio",
    "construct_a",
    "construct_b",
    "construct_c",
    "cyclic_shift_ratio",
    "dft",
    "exp_mapping",
    "find_primitive_element",
    "laz_lower_bound",
    "load_set",
    "omega_for_b",
    "optimality_report",
    "power_permutation",
    "rho_laz",
    "save_set",
    "set_from_dict",
    "set_to_dict",
    "sidelobe_stats",
    "spectral_tolerance",
    "table2",
    "tfm_optimal",
    "validate_mapping",
    "verify_comb_magnitude",
    "verify_cyclically_distinct",
    "verify_spectral_null",
    "verify_zcz",
    "zaz_feasible",
    "zaz_ratio",
    "zero_tolerance",
]
