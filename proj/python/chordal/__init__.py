"""Chordal Loewner evolution and univalence diagnostics."""

from ._chordal import (
    ConvergenceError,
    DomainError,
    DriverFamily,
    Measure,
    SolverConfig,
    cauchy_transform,
    driver_from_json,
    evaluate_map,
    hayman_report,
    hydrodynamic_parameter,
    measure_from_json,
    moment,
    reciprocal_cauchy,
    semigroup_defect,
    solve_transition,
    stieltjes_invert,
    univalence_certificate,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "DriverFamily",
    "Measure",
    "SolverConfig",
    "cauchy_transform",
    "driver_from_json",
    "evaluate_map",
    "hayman_report",
    "hydrodynamic_parameter",
    "measure_from_json",
    "moment",
    "reciprocal_cauchy",
    "semigroup_defect",
    "solve_transition",
    "stieltjes_invert",
    "univalence_certificate",
]
