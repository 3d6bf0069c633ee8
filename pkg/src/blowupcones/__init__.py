"""Exact cone computations on the blowup of P^3 at eight very general points."""

from .lattice import (
    CANONICAL,
    EXCEPTIONAL_LINES,
    EXCEPTIONALS,
    H,
    HALF_ANTICANONICAL,
    LINE,
    ROOT_SYSTEM,
    CurveClass,
    DivisorClass,
    RootSystem,
    curve_intersection,
    dq_numbers,
    exceptional,
    exceptional_line,
    line_between,
    pairing,
)
from .weyl import (
    ReductionResult,
    StepLimitExceeded,
    WeylWord,
    apply_word,
    canonical_shape,
    cremona,
    exceptional_orbit,
    inverse_word,
    is_minus_one_divisor,
    is_standard_form,
    minus_one_certificate,
    orbit_degree_counts,
    reflect,
    to_standard_form,
)
from .cones import (
    Certificate,
    CertificateError,
    GeneratorSets,
    HypothesisViolated,
    NotEffective,
    NotMovable,
    NotNef,
    accumulation_report,
    curve_decompose,
    curve_generators,
    effective_decompose,
    effective_seed,
    in_box,
    in_fundamental_chamber,
    in_tits_cone,
    is_nef,
    movable_decompose,
    nef_decompose,
    nef_generators,
    pi_generators,
    ray_distance,
)
from .oracle import (
    ConeProblem,
    Feasible,
    Infeasible,
    MembershipReport,
    ScaleExceeded,
    cone_member,
    curve_problem,
    divisor_problem,
    effective_generators,
    effective_membership,
)
from .surface import (
    MINUS_CANONICAL,
    SurfaceClass,
    is_minus_one_curve,
    restrict_to_surface,
    surface_pairing,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL",
    "Certificate",
    "CertificateError",
    "ConeProblem",
    "CurveClass",
    "DivisorClass",
    "EXCEPTIONAL_LINES",
    "EXCEPTIONALS",
    "Feasible",
    "GeneratorSets",
    "H",
    "HALF_ANTICANONICAL",
    "HypothesisViolated",
    "Infeasible",
    "LINE",
    "MINUS_CANONICAL",
    "MembershipReport",
    "NotEffective",
    "NotMovable",
    "NotNef",
    "ROOT_SYSTEM",
    "ReductionResult",
    "RootSystem",
    "ScaleExceeded",
    "StepLimitExceeded",
    "SurfaceClass",
    "WeylWord",
    "accumulation_report",
    "apply_word",
    "canonical_shape",
    "cone_member",
    "cremona",
    "curve_decompose",
    "curve_generators",
    "curve_intersection",
    "curve_problem",
    "divisor_problem",
    "dq_numbers",
    "effective_decompose",
    "effective_generators",
    "effective_membership",
    "effective_seed",
    "exceptional",
    "exceptional_line",
    "exceptional_orbit",
    "in_box",
    "in_fundamental_chamber",
    "in_tits_cone",
    "inverse_word",
    "is_minus_one_curve",
    "is_minus_one_divisor",
    "is_nef",
    "is_standard_form",
    "line_between",
    "minus_one_certificate",
    "movable_decompose",
    "nef_decompose",
    "nef_generators",
    "orbit_degree_counts",
    "pairing",
    "pi_generators",
    "ray_distance",
    "reflect",
    "restrict_to_surface",
    "surface_pairing",
    "to_standard_form",
]
