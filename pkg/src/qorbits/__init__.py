"""qorbits: exact verification toolkit for the two-parameter reflection
equation algebra of gl(n), its center and characters, and the quantizations
of semisimple coadjoint orbits."""

from .center import (
    cayley_hamilton_check,
    elementary_symmetric,
    newton_sigma,
    power_traces,
    r_sequence,
    s_from_sigma,
    sigma_from_s,
)
from .classical import classical_orbit_profile
from .ere import AlgebraElement, Presentation, ere_presentation, extract_relations
from .orbits import (
    FlatnessReport,
    OrbitSpec,
    flatness_check,
    general_poly_relations,
    kks_presentation,
    minimal_poly_relations,
    quotient_presentation,
    trace_relations,
)
from .reports import CheckReport, SuiteConfig, emit, run_battery, run_suite
from .scalars import (
    ExactDivisionError,
    ParamFraction,
    ParamPoly,
    PoleAtQ1Error,
    QLaurent,
    Rat,
    divide_exact,
    parse_scalar,
    poly_gcd,
    quantum_integer,
    rat,
    scalar_to_str,
)
from .tensors import (
    TensorMatrix,
    WeightMatrix,
    check_hecke,
    check_trace_normalization,
    check_ybe,
    flip,
    hecke_symmetry,
    quantum_trace,
    standard_r,
    weight_matrix,
)
from .theta import (
    Character,
    Composition,
    character,
    coeff_C,
    compositions,
    enumerate_characters,
    grouped_substitution_check,
    root_of_unity_substitution,
    theta,
    theta_multiplicity_free,
    theta_recurrence_check,
    theta_t,
    theta_via_C,
)

__version__ = "0.1.0"
