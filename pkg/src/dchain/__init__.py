"""Disjointness graphs of planar point sets: exact-integer geometry for
double-chain and convex configurations, closed-form chromatic values, a
constructive coloring, and an exact branch-and-bound chromatic solver."""

from .coloring import (
    STAR,
    THRACKLE,
    ClassKind,
    Coloring,
    VerifyReport,
    classify_class,
    classify_coloring,
    coloring_from_json,
    coloring_to_json,
    construct_double_chain_coloring,
    load_coloring,
    remove_star_apices,
    save_coloring,
    thrackle_edge_bound_ok,
    verify_coloring,
    verify_report_to_json,
)
from .disjointness import (
    DisjointnessGraph,
    SegmentId,
    all_segments,
    build_graph,
    convex_hull_edges,
    export_graph,
    graph_from_json,
    graph_to_json,
    segment_rank,
)
from .formulas import FormulaResult, double_chain_chi, f_of, f_step, formula_table, g_of
from .geometry import (
    DoubleChainSearchError,
    Orientation,
    Partition,
    Point,
    PointSet,
    delete_points,
    find_collinear_triple,
    gen_convex,
    gen_double_chain,
    is_general_position,
    load_points,
    orientation,
    pointset_from_json,
    pointset_to_json,
    save_points,
    segments_disjoint,
    validate_double_chain,
)
from .solver import (
    ChiResult,
    ConvexRow,
    ScanReport,
    SweepRow,
    chromatic_number_exact,
    clique_lower,
    conjecture_scan,
    convex_sweep,
    double_chain_sweep,
    dsatur_upper,
    enumerate_optimal_colorings,
    sample_general_position,
    singleton_class_check,
)

__version__ = "0.1.0"
