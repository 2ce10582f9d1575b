"""Extremal counts of interval-spectrum vertices in proper edge colorings.

A proper edge t-coloring uses every color in [1,t] and gives adjacent
edges distinct colors. A vertex whose incident colors form a run of
consecutive integers is an interval vertex; f counts them. This package
computes the extremal values of f over all valid colorings (mu1 = min,
mu2 = max, per t, and their min/max over t) by exact branch-and-bound
backed by certified structural bounds, and ships a verified catalog of
reference colorings of the Petersen graph realizing the extremes.
"""

from .coloring import (
    Certificate,
    CertificateCheck,
    EdgeColoring,
    InvalidColoringError,
    SpectrumReport,
    Violation,
    analyze,
    check_certificate,
    is_interval,
    is_valid,
    rebind,
    reflect,
    require_valid,
    spectrum,
    validate,
)
from .fixtures import fixture_dir, fixtures
from .graphs import (
    Graph,
    GraphError,
    InducedSubgraph,
    all_perfect_matchings,
    chromatic_index,
    complete,
    contains_induced_c6,
    contains_induced_claw,
    cycle,
    delete_vertex,
    from_spec,
    full_set,
    girth,
    graph_from_dict,
    graph_to_dict,
    induced_subgraph,
    is_path_forest,
    is_petersen_labeled,
    load_graph,
    path,
    petersen,
    set_labels,
    vertex_set,
)
from .search import (
    AggregateBound,
    EdgeOrder,
    MuProfile,
    Objective,
    ProfileRow,
    SearchConfig,
    SearchOutcome,
    SolveStatus,
    legal_t_range,
    profile,
    sample,
    solve,
)
from .structural import (
    BoundEvidence,
    EvidenceKind,
    ModReduction,
    is_interval_colorable_regular,
    max_path_forest_subset,
    mod_reduction,
    mu1_floor_from_matchings,
    mu1_floors,
    mu2_caps,
    mu2_top_cap,
    mu22_cap_cubic,
    mu22_cap_from_noninterval,
)

__version__ = "1.0.0"

__all__ = [
    "AggregateBound",
    "BoundEvidence",
    "Certificate",
    "CertificateCheck",
    "EdgeColoring",
    "EdgeOrder",
    "EvidenceKind",
    "Graph",
    "GraphError",
    "InducedSubgraph",
    "InvalidColoringError",
    "ModReduction",
    "MuProfile",
    "Objective",
    "ProfileRow",
    "SearchConfig",
    "SearchOutcome",
    "SolveStatus",
    "SpectrumReport",
    "Violation",
    "all_perfect_matchings",
    "analyze",
    "check_certificate",
    "chromatic_index",
    "complete",
    "contains_induced_c6",
    "contains_induced_claw",
    "cycle",
    "delete_vertex",
    "fixture_dir",
    "fixtures",
    "from_spec",
    "full_set",
    "girth",
    "graph_from_dict",
    "graph_to_dict",
    "induced_subgraph",
    "is_interval",
    "is_interval_colorable_regular",
    "is_path_forest",
    "is_petersen_labeled",
    "is_valid",
    "legal_t_range",
    "load_graph",
    "max_path_forest_subset",
    "mod_reduction",
    "mu1_floor_from_matchings",
    "mu1_floors",
    "mu2_caps",
    "mu2_top_cap",
    "mu22_cap_cubic",
    "mu22_cap_from_noninterval",
    "path",
    "petersen",
    "profile",
    "rebind",
    "reflect",
    "require_valid",
    "sample",
    "set_labels",
    "solve",
    "spectrum",
    "validate",
    "vertex_set",
]
