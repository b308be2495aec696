"""Exact divisor-class arithmetic, phi, and gonality bounds on an unnodal Enriques surface."""

from .certificates import (
    Certificate,
    Step,
    cliffdim_case1_certificate,
    cliffdim_case2_bounds,
    lemma_bound_certificate,
    plane_curve_certificate,
    recheck,
)
from .errors import EnriquesError, InvariantViolation, PreconditionError
from .expr import ParseError, format_divisor, parse_divisor
from .gonality import (
    Decomposition,
    GonalityReport,
    SteinerReport,
    bounds,
    bundle_invariants,
    classify_minimal_L,
    decompositions,
    gon_window,
    steiner_report,
)
from .lattice import (
    BASIS,
    GRAM,
    A1, A2, A3, A4, A5, A6, A7, A8,
    E1, E2,
    DivisorClass,
    Polarization,
    chi,
    classify_system,
    dim_linear_system,
    genus,
    is_nef,
    is_positive_cone,
    pairing,
)
from .oracle import brute_oracle_phi
from .slices import IsotropicClass, PhiResult, SliceQuery, enumerate_slice, phi

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Step",
    "cliffdim_case1_certificate",
    "cliffdim_case2_bounds",
    "lemma_bound_certificate",
    "plane_curve_certificate",
    "recheck",
    "EnriquesError",
    "InvariantViolation",
    "PreconditionError",
    "ParseError",
    "format_divisor",
    "parse_divisor",
    "Decomposition",
    "GonalityReport",
    "SteinerReport",
    "bounds",
    "bundle_invariants",
    "classify_minimal_L",
    "decompositions",
    "gon_window",
    "steiner_report",
    "BASIS",
    "GRAM",
    "A1",
    "A2",
    "A3",
    "A4",
    "A5",
    "A6",
    "A7",
    "A8",
    "E1",
    "E2",
    "DivisorClass",
    "Polarization",
    "chi",
    "classify_system",
    "dim_linear_system",
    "genus",
    "is_nef",
    "is_positive_cone",
    "pairing",
    "brute_oracle_phi",
    "IsotropicClass",
    "PhiResult",
    "SliceQuery",
    "enumerate_slice",
    "phi",
]
