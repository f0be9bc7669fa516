"""Exact-arithmetic toolkit for diamond-free strongly regular graphs and partial quadrangles."""

from srgpq.automorphism import (
    GammaReport,
    GroupClosure,
    Permutation,
    RelatedSet,
    build_sigma,
    canonical_sigma_family,
    generate_gamma,
    related_set,
    verify_inverse_law,
    verify_involution_property,
)
from srgpq.certificates import CountingSystem, pq_3_35_20_certificate, solve_counting_system
from srgpq.geometry import (
    IncidenceStructure,
    build_gq35,
    build_rook4,
    build_shrikhande,
    collinearity_graph,
    graph_to_pq,
    verify_pq_axioms,
)
from srgpq.graphcore import (
    Graph,
    TriplePartition,
    common_neighbors,
    is_diamond_free,
    is_srg,
    maximal_cliques_via_edges,
    phi_partition,
)
from srgpq.localstats import (
    MSpectrum,
    PairStats,
    check_condition_con,
    m_spectrum,
    matched_pairs,
    pair_stats,
    psi_partition,
    verify_eq_pq,
    verify_inv_formula,
    verify_psi_regularity,
    verify_star,
)
from srgpq.params import (
    FamilyInfo,
    FixedPointBound,
    ParameterError,
    PqParams,
    SpectrumReport,
    SrgParams,
    detect_family,
    family_parameter_tuple,
    fixed_point_bound,
    pq_to_srg,
    solve_diophantine_17,
    spectrum_of,
    srg_to_pq_params,
)
from srgpq.reports import CheckReport

__all__ = [
    "CheckReport",
    "CountingSystem",
    "FamilyInfo",
    "FixedPointBound",
    "GammaReport",
    "Graph",
    "GroupClosure",
    "IncidenceStructure",
    "MSpectrum",
    "PairStats",
    "ParameterError",
    "Permutation",
    "PqParams",
    "RelatedSet",
    "SpectrumReport",
    "SrgParams",
    "TriplePartition",
    "build_gq35",
    "build_rook4",
    "build_shrikhande",
    "build_sigma",
    "canonical_sigma_family",
    "check_condition_con",
    "collinearity_graph",
    "common_neighbors",
    "detect_family",
    "family_parameter_tuple",
    "fixed_point_bound",
    "generate_gamma",
    "graph_to_pq",
    "is_diamond_free",
    "is_srg",
    "m_spectrum",
    "matched_pairs",
    "maximal_cliques_via_edges",
    "pair_stats",
    "phi_partition",
    "pq_3_35_20_certificate",
    "pq_to_srg",
    "psi_partition",
    "related_set",
    "solve_counting_system",
    "solve_diophantine_17",
    "spectrum_of",
    "srg_to_pq_params",
    "verify_eq_pq",
    "verify_inv_formula",
    "verify_inverse_law",
    "verify_involution_property",
    "verify_pq_axioms",
    "verify_psi_regularity",
    "verify_star",
]
