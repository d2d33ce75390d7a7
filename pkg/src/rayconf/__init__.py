"""Cyclic color sequences realizable by colored rays from planar point sets."""

from .configs import (
    BlockTuple,
    Configuration,
    canonicalize,
    count_configurations,
    enumerate_configurations,
    from_blocks,
    to_blocks,
)
from .constructions import (
    RingPair,
    alternating_gon,
    clustered_set,
    crossing_hard_set,
    f_bound,
    fc_universal_realizer,
    g_bound,
    opposite_horizontal_realizer,
    ring_pair,
    universal_point_set,
    universal_realizer,
    wedge_point_bound,
    width_lower_bound,
)
from .crossing import (
    ChiCertificate,
    ChiStrategy,
    alternation_limit,
    chi_search,
    min_crossing_search,
)
from .general import (
    FeasibilityTables,
    GammaMethod,
    LambdaTuple,
    PiTuple,
    SigmaTuple,
    canonical_directions,
    decide_general,
    gamma,
    general_oracle,
    region_points,
)
from .geom import (
    BLUE,
    Color,
    Direction,
    HalfplaneCounts,
    Orientation,
    Point,
    PointSet,
    PositionClass,
    RED,
    format_rational,
    halfplane_counts,
    orientation,
    parse_rational,
    position_class,
)
from .lineal import LineDecision, decide_line, line_oracle
from .lowerbound import (
    LowerBoundResult,
    MatchedPair,
    conf2_realizer,
    es_monotone,
    es_three_way,
    ham_sandwich,
    lb_family,
    noncrossing_matching,
)
from .rays import (
    PairClass,
    Ray,
    RayFamily,
    Regime,
    classify_pair,
    configuration_at_infinity,
    crossing_count,
    inverse_family,
    validate_family,
)
from .seqcount import (
    concatenated_word,
    count_sigma,
    count_sigma_prime,
    enumerate_sigma,
    nonequivalence_check,
    ud_map,
    vertical_realize,
)
