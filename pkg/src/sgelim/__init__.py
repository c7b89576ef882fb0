"""Signed elimination orderings on signed graphs.

Recognition of signed-eliminable graphs (greedy and condition-based, with
checkable certificates), the SEO-independent degree-pair invariant, fast
checkers for restricted classes, and an exhaustive small-graph cross-check
harness.
"""

from .graph import (
    MINUS,
    PLUS,
    SIGNS,
    SgParseError,
    Sign,
    SignedGraph,
    UnsignedGraph,
    build_graph,
    connected_components,
    enumerate_signed_graphs,
    flip_sign,
    flip_signs,
    induced_subgraph,
    neighborhood,
    parse_sg,
    serialize_sg,
    sign_restriction,
    signed_graph_count,
    signed_graph_from_index,
    underlying_graph,
)
from .seo import (
    NotSignedEliminableError,
    Ordering,
    SeoViolation,
    SimplicialViolation,
    enumerate_seos,
    format_ordering,
    greedy_seo,
    is_seo,
    is_seo_via_weights,
    is_signed_simplicial,
    parse_ordering,
    signed_simplicial_set,
)
from .invariant import (
    deg_tilde,
    degree_profile,
    format_deg_tilde,
    format_profile,
    invariance_check,
)
from .characterize import (
    AltPathViolation,
    Certificate,
    ChordalityResult,
    ChordlessCycle,
    Hill,
    Mountain,
    Verdict,
    characterize,
    check_c1,
    check_c2,
    chordality_check,
    find_hill,
    find_mountain,
    format_certificate,
    has_alternating_4path,
    verify_certificate,
)
from .special import (
    SpecialVerdict,
    chordal_underlying_check,
    complete_graph_check,
    format_special_verdict,
    four_vertex_check,
    low_independence_check,
    remark_equivalence_check,
)
from .oracle import (
    CrossCheckReport,
    MismatchRecord,
    brute_force_se,
    build_family,
    cross_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
