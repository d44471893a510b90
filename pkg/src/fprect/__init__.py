"""fprect: exact verification toolkit and fixed-point solver for weakly
contractive self-maps on b-rectangular metric spaces.

The package works with finite (or finitely sampled) spaces whose distances
are exact rationals.  It verifies the metric-hierarchy axioms with full
witness reporting, checks C-class weakly contractive inequalities pair by
pair, runs the orbit iteration with convergence diagnostics, and replicates
the bundled reference examples bit-exactly.
"""

from .errors import (
    ArityMismatch,
    AsymmetricEntry,
    DomainError,
    DuplicateLabel,
    FprectError,
    InvalidEntry,
    InvalidFunctionParams,
    InvalidParameter,
    InvalidRange,
    InvalidWeights,
    NegativeDistance,
    NoFiniteCoefficient,
    NotClosed,
    ParameterOutOfRange,
    ParseError,
    TooFewPoints,
    UnknownPoint,
    UnresolvablePair,
    VariantMismatch,
)
from .exact import (
    Value,
    format_rational,
    parse_rational,
    precision,
    rational_grid,
)
from .spaces import (
    Axiom,
    AxiomReport,
    DistanceTable,
    FallbackRule,
    GeneralizedMetricSpace,
    Point,
    SpaceProfile,
    Witness,
    build_space,
    check_b_rectangular,
    check_b_triangle,
    check_rectangular,
    check_triangle,
    distance,
    generate_random_space,
    minimal_b_rect_s,
    sample_interval,
)
from .functions import (
    FunctionSpec,
    Piece,
    PropertyReport,
    TripledSpec,
    cclass,
    check_monotone_tripled,
    evaluate,
    identity,
    linear,
    piecewise_spec,
    poly_spec,
    ratio_spec,
    sqrt_spec,
    verify_altering,
    verify_cclass,
    verify_lsc,
    verify_phi_u,
    verify_usc,
)
from .contraction import (
    CheckReport,
    ContractionInstance,
    MapPiece,
    PairVerdict,
    Preset,
    SelfMap,
    Variant,
    apply_map,
    check_all,
    check_pair,
    metric_halfsum,
    compute_l_twoterm,
    compute_m_fourterm,
    compute_m_convex,
    compute_m_max,
    constant_map,
    explicit_map,
    m_convex,
    m_max,
    make_preset,
    piecewise_map,
)
from .solver import (
    FixedPointCheck,
    FixedPointResult,
    IterationTrace,
    SolveStatus,
    check_vanishing,
    exhaustive_solve,
    picard_iterate,
    uniqueness_scan,
    verify_decreasing,
    verify_fixed_point,
)
from .replicate import CASE_IDS, ReplicationReport, replicate, replicate_all

__version__ = "0.1.0"
