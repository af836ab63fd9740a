"""Interval graph recognition via PQ-trees, exact counts of distinguishing
colorings, and distinguishing list colorings."""

from .counting import binomial, count_at_node, count_distinguishing, distinguishing_number, labeled
from .errors import (
    DisconnectedGraph,
    GraphFormatError,
    InvariantError,
    LimitExceeded,
    ListAssignmentError,
    ListExhausted,
    NoColoringFound,
    NotIntervalGraph,
    ReductionFailure,
    ScaleLimit,
)
from .graph import (
    Graph,
    IntervalRepresentation,
    graph_from_intervals,
    is_connected,
    maximal_cliques,
    parse_edge_list,
    parse_graph_text,
    parse_intervals,
)
from .labeling import (
    LabeledPQTree,
    canonical_code,
    clones,
    is_reversible,
    isomorphism_classes,
    label_tree,
    representative_sets,
    twins_and_older,
)
from .listcolor import (
    ListAssignment,
    construct_list_coloring,
    count_list_classes,
    enumerate_list_classes,
    greedy_complete_coloring,
    verify_distinguishing,
)
from .pqtree import PQNode, PQTree, build_pqtree, check_consecutiveness, enumerate_frontiers, frontier, reduce

__version__ = "0.1.0"
