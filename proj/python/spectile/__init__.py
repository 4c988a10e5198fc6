"""Spectral sets and translational tilings for convex polytopes.

Exact rational polytope geometry, closed-form indicator transforms, tiling
and spectrum verification on finite windows, and non-spectrality
certificates for non-symmetric convex bodies.
"""

from ._core import (
    DegenerateBodyError,
    InsufficientWindowError,
    Lattice,
    ParseError,
    PointSet,
    Polytope,
    SymmetricBodyError,
    WindowTooLargeError,
    autocorrelation,
    autocorrelation_float,
    brunn_minkowski_gap,
    can_normalize_exactly,
    certificate_consistency_check,
    certify_nonspectral,
    difference_body,
    difference_set,
    dft_oracle,
    ft_autocorrelation,
    ft_indicator,
    inner_product,
    intersection,
    minkowski_sum,
    normalize_volume,
    orthogonality_graph,
    reflect,
    run_command,
    scale,
    support_condition_necessary,
    support_condition_sufficient,
    symmetry_report,
    tiling_level,
    translate,
    verify_spectrum_window,
    verify_tiling,
    zero_test,
)

__all__ = [
    "DegenerateBodyError",
    "InsufficientWindowError",
    "Lattice",
    "ParseError",
    "PointSet",
    "Polytope",
    "SymmetricBodyError",
    "WindowTooLargeError",
    "autocorrelation",
    "autocorrelation_float",
    "brunn_minkowski_gap",
    "can_normalize_exactly",
    "certificate_consistency_check",
    "certify_nonspectral",
    "difference_body",
    "difference_set",
    "dft_oracle",
    "ft_autocorrelation",
    "ft_indicator",
    "inner_product",
    "intersection",
    "minkowski_sum",
    "normalize_volume",
    "orthogonality_graph",
    "reflect",
    "run_command",
    "scale",
    "support_condition_necessary",
    "support_condition_sufficient",
    "symmetry_report",
    "tiling_level",
    "translate",
    "verify_spectrum_window",
    "verify_tiling",
    "zero_test",
]

__version__ = "0.1.0"
