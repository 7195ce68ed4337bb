"""Exact independence polynomials, multi-coloured chromatic polynomials and Horn checks."""

from .chromatic import (
    PartitionCounts,
    generalized_chromatic,
    generalized_chromatic_via_interpolation,
    generalized_chromatic_via_join,
    multicolor_count_bruteforce,
    ordered_partition_counts,
    ordinary_chromatic,
)
from .closed_forms import (
    a_vector,
    cycle_diagonal_q1,
    cycle_inverse_power_coefficient,
    family_chromatic,
    peo_chromatic,
    peo_coefficient,
    peo_inverse_power_coefficient,
    read_cycle_chromatic,
    read_cycle_polynomial,
)
from .errors import ChornError, GraphError, GuardExceeded, InconsistentSamples, TruncationError
from .graphs import (
    Graph,
    GraphFamily,
    Kind,
    PEOrdering,
    build_graph,
    family_graph,
    find_peo,
    induced_subgraph,
    is_chordal_bruteforce,
    join_graph,
    parse_graph_spec,
    verify_peo,
)
from .horn import (
    CoefficientTable,
    HornVerdict,
    Ray,
    RationalFunction,
    RatioSample,
    box_coefficients,
    coefficient_table,
    horn_verdict,
    ratio_samples,
    rational_fit,
    zero_scan,
)
from .qpoly import QPolynomial, interpolate_q
from .series import (
    ExponentVector,
    TruncatedSeries,
    coefficient,
    independence_series,
    one_variable_collapse,
    series_int_power,
    series_invert,
    series_multiply,
)

__version__ = "0.1.0"
