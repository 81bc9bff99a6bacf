"""Diagonal sets, inequality witnesses, and verification on finite digraphs."""

__version__ = "0.1.0"

from .graph import Graph, VertexSet, make_graph
from .upsets import PERIOD_CAP, PeriodCapError, UPSet, parse_upset, upset_normalize
from .walks import (
    BoolMatrix,
    PowerTrace,
    TraceCapError,
    closed_walk_spectrum,
    cyclic_vertices,
    has_closed_walk,
    has_walk_from,
    mat_mul_bool,
    mat_pow_bool,
    power_trace,
    reach_backward,
    spectra_from_trace,
    strongly_connected_components,
)
from .diagonals import (
    ChainReport,
    DiagonalSpec,
    Evidence,
    InternalDisagreementError,
    Side,
    TheoremViolationError,
    Witness,
    cantor_witness,
    compute_diagonal,
    default_spec_battery,
    diagonal,
    diagonal_S,
    diagonal_inf,
    diagonal_n,
    distinct_out_count,
    inclusion_chain_check,
    validate_witness,
    variant_witness,
    verify_battery,
    verify_unequal,
)
from .graphio import EdgeListError, emit_edge_list, gen_random, parse_edge_list

__all__ = [
    "BoolMatrix",
    "ChainReport",
    "DiagonalSpec",
    "EdgeListError",
    "Evidence",
    "Graph",
    "InternalDisagreementError",
    "PERIOD_CAP",
    "PeriodCapError",
    "PowerTrace",
    "Side",
    "TheoremViolationError",
    "TraceCapError",
    "UPSet",
    "VertexSet",
    "Witness",
    "cantor_witness",
    "closed_walk_spectrum",
    "compute_diagonal",
    "cyclic_vertices",
    "default_spec_battery",
    "diagonal",
    "diagonal_S",
    "diagonal_inf",
    "diagonal_n",
    "distinct_out_count",
    "emit_edge_list",
    "gen_random",
    "has_closed_walk",
    "has_walk_from",
    "inclusion_chain_check",
    "make_graph",
    "mat_mul_bool",
    "mat_pow_bool",
    "parse_edge_list",
    "parse_upset",
    "power_trace",
    "reach_backward",
    "spectra_from_trace",
    "strongly_connected_components",
    "upset_normalize",
    "validate_witness",
    "variant_witness",
    "verify_battery",
    "verify_unequal",
]
