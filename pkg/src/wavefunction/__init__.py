"""
Wavefunction Module

Evaluation of phi in log space, numeric normalization under three measures,
the closed-form normalization chain with pole flags, the stationary-equation
residual and CSV sampling.
"""

from src.wavefunction.phi import (
    Measure,
    WavefunctionSpec,
    count_nodes,
    evaluate_phi,
    log_phi,
    sample_wavefunction,
)
from src.wavefunction.normalization import (
    build_wavefunction,
    check_normalizable,
    decay_exponent,
    envelope_peak,
    norm_integral,
    normalize_numeric,
)
from src.wavefunction.closed_form import (
    NormalizationData,
    NormalizationReport,
    closed_form_normalization,
    compare_normalizations,
    normalization_chain,
    normalization_constant_from_terms,
)
from src.wavefunction.residual import stationary_residual

__all__ = [
    "Measure",
    "WavefunctionSpec",
    "count_nodes",
    "evaluate_phi",
    "log_phi",
    "sample_wavefunction",
    "build_wavefunction",
    "check_normalizable",
    "decay_exponent",
    "envelope_peak",
    "norm_integral",
    "normalize_numeric",
    "NormalizationData",
    "NormalizationReport",
    "closed_form_normalization",
    "compare_normalizations",
    "normalization_chain",
    "normalization_constant_from_terms",
    "stationary_residual",
]
