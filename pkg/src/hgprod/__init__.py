"""Hypergraph products, exact edge counts, isomorphism testing and law audits."""

from .core import (
    Atom,
    Edge,
    Hypergraph,
    Label,
    Pair,
    atoms,
    degree_sequence,
    edge_key,
    edge_size_multiset,
    format_edge,
    format_label,
    from_tokens,
    hypergraph,
    is_bijection,
    is_homomorphism,
    is_simple,
    iter_sorted_edges,
    label_key,
    rank,
    sorted_members,
    validate,
    vertex_signatures,
)
from .counting import (
    COUNTABLE_KINDS,
    CountReport,
    cartesian_edge_count,
    dirmax_edge_count,
    stirling2,
    strong_edge_count,
    verify_count,
)
from .checker import (
    ASSOCIATIVE_KINDS,
    CounterexampleAudit,
    CounterexampleMismatch,
    FactorSummary,
    FuzzReport,
    GeneratorConfig,
    InfeasibleError,
    LawReport,
    PreconditionError,
    TrialFailure,
    check_associativity,
    check_commutativity,
    check_lemma1,
    counterexample_audit,
    counterexample_factors,
    derive_seed,
    format_fuzz_report,
    format_law_report,
    fuzz_law,
    fuzz_report_dict,
    law_report_dict,
    random_hypergraph,
    summarize,
)
from .hgio import HgParseError, parse_hg, parse_label, serialize_hg
from .iso import (
    IsoBoundError,
    IsoResult,
    apply_mapping,
    are_isomorphic,
    regroup_left_to_right,
    regroup_right_to_left,
    relabel,
    swap_map,
)
from .products import (
    DIRECT_KINDS,
    ProductKind,
    cartesian,
    dirmax,
    dirmin,
    dirnon,
    edge_pair_product,
    normal,
    product,
    product_vertices,
    strong,
)

__all__ = [
    "ASSOCIATIVE_KINDS",
    "Atom",
    "COUNTABLE_KINDS",
    "CountReport",
    "CounterexampleAudit",
    "CounterexampleMismatch",
    "DIRECT_KINDS",
    "Edge",
    "FactorSummary",
    "FuzzReport",
    "GeneratorConfig",
    "HgParseError",
    "Hypergraph",
    "InfeasibleError",
    "IsoBoundError",
    "IsoResult",
    "Label",
    "LawReport",
    "Pair",
    "PreconditionError",
    "ProductKind",
    "TrialFailure",
    "apply_mapping",
    "are_isomorphic",
    "atoms",
    "cartesian",
    "cartesian_edge_count",
    "check_associativity",
    "check_commutativity",
    "check_lemma1",
    "counterexample_audit",
    "counterexample_factors",
    "degree_sequence",
    "derive_seed",
    "dirmax",
    "dirmax_edge_count",
    "dirmin",
    "dirnon",
    "edge_key",
    "edge_pair_product",
    "edge_size_multiset",
    "format_edge",
    "format_fuzz_report",
    "format_label",
    "format_law_report",
    "from_tokens",
    "fuzz_law",
    "fuzz_report_dict",
    "hypergraph",
    "is_bijection",
    "is_homomorphism",
    "is_simple",
    "iter_sorted_edges",
    "label_key",
    "law_report_dict",
    "normal",
    "parse_hg",
    "parse_label",
    "product",
    "product_vertices",
    "random_hypergraph",
    "rank",
    "regroup_left_to_right",
    "regroup_right_to_left",
    "relabel",
    "serialize_hg",
    "sorted_members",
    "stirling2",
    "strong",
    "strong_edge_count",
    "summarize",
    "swap_map",
    "validate",
    "vertex_signatures",
]
