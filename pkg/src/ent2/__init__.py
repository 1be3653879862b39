"""Entanglement-two toolkit: linear-time recognition of undirected graphs
with entanglement at most 2, an exact game solver for small graphs, and
algebraic decomposition certificates."""

from .algebra import (
    Certificate,
    CertificateError,
    DerivedGraph,
    Eta,
    GlueGraph,
    LegalCollapse,
    Molecule,
    collapse,
    derived_graph,
    evaluate_certificate,
    format_certificate,
    is_zeta2_glue,
    legal_collapse,
    make_molecule,
    parse_certificate,
    verify_certificate,
)
from .decider import (
    GlueFamily,
    GlueOverlap,
    RejectComponent,
    RejectEdgeBound,
    Superstructure,
    SuperstructureDecision,
    TraversalDecision,
    decide_glue_traversal,
    decide_superstructure,
    generate_zeta2,
    glue_family,
    is_molecule,
    superstructure,
)
from .game import (
    COPS,
    THIEF,
    WINNER_COPS,
    WINNER_THIEF,
    GamePosition,
    GameResult,
    StarWitness,
    entanglement,
    entanglement_leq1_directed,
    entanglement_leq1_undirected,
    solve_game,
)
from .graphs import (
    DiGraph,
    Graph,
    GraphError,
    GraphFormatError,
    biconnected_components,
    build_digraph,
    build_graph,
    connected_components,
    degree,
    dfs_twbe,
    format_digraph,
    format_graph,
    induced_subgraph,
    parse_digraph,
    parse_graph,
    symmetrize,
)
from .patterns import (
    ConditionVerdict,
    LongCycle,
    SquareAC,
    Triangle3C,
    canonical_cycle,
    check_conditions,
    find_3c_violation,
    find_ac_violation,
    find_long_cycle,
)

__all__ = [
    "COPS",
    "THIEF",
    "WINNER_COPS",
    "WINNER_THIEF",
    "Certificate",
    "CertificateError",
    "ConditionVerdict",
    "DerivedGraph",
    "DiGraph",
    "Eta",
    "GamePosition",
    "GameResult",
    "GlueFamily",
    "GlueGraph",
    "GlueOverlap",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "LegalCollapse",
    "LongCycle",
    "Molecule",
    "RejectComponent",
    "RejectEdgeBound",
    "SquareAC",
    "StarWitness",
    "Superstructure",
    "SuperstructureDecision",
    "TraversalDecision",
    "Triangle3C",
    "biconnected_components",
    "build_digraph",
    "build_graph",
    "canonical_cycle",
    "check_conditions",
    "collapse",
    "connected_components",
    "decide_glue_traversal",
    "decide_superstructure",
    "degree",
    "derived_graph",
    "dfs_twbe",
    "entanglement",
    "entanglement_leq1_directed",
    "entanglement_leq1_undirected",
    "evaluate_certificate",
    "find_3c_violation",
    "find_ac_violation",
    "find_long_cycle",
    "format_certificate",
    "format_digraph",
    "format_graph",
    "generate_zeta2",
    "glue_family",
    "induced_subgraph",
    "is_molecule",
    "is_zeta2_glue",
    "legal_collapse",
    "make_molecule",
    "parse_certificate",
    "parse_digraph",
    "parse_graph",
    "solve_game",
    "superstructure",
    "symmetrize",
    "verify_certificate",
]
