"""Monitoring edge-geodetic sets: mandatory vertices, verification and chordal graphs."""

from .chordal import (
    ChordalityCertificate,
    check_chordal,
    find_cycle_through_p3,
    gen_chordal,
    is_simplicial,
    lex_bfs_order,
    verify_certificate,
)
from .errors import MegkitError, ParseError
from .graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    build_graph,
    count_shortest_paths,
    distance_avoiding_edge,
)
from .megset import (
    MonitorReport,
    SupportState,
    is_meg_set,
    mandatory_fast,
    mandatory_naive,
    monitored_edges,
    pair_monitors_edge,
    simplicial_subset_check,
    support_state,
    supports,
)
from .oracle import (
    MinMegResult,
    articulation_points,
    check_meg_minimal,
    compose_cut_vertex,
    min_meg_brute,
)

__version__ = "0.1.0"
