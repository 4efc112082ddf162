"""Exact independence, matching and König-Egerváry invariants of small graphs."""

from .critical import CriticalProfile, critical_difference, critical_profile, difference, is_critical_set
from .errors import (
    GraphFormatError,
    KEGraphError,
    OmegaCapExceeded,
    PreconditionError,
    SizeGuardError,
    TheoremViolation,
)
from .graph import (
    Graph,
    closed_neighborhood,
    encode_graph6,
    from_edge_list,
    induced_subgraph,
    is_unicyclic,
    neighborhood,
    parse_edge_text,
    parse_graph6,
)
from .independence import OmegaFamily, alpha, core, corona, enumerate_independent_sets, is_independent, omega
from .kernels import BACKEND
from .ke import KeDiagnosis, diagnose, embed_non_ke, is_ke
from .matching import Matching, matching_from_into, maximum_matching, mu
from .report import TheoremReport, Verdict

__all__ = [
    "BACKEND",
    "CriticalProfile",
    "Graph",
    "GraphFormatError",
    "KEGraphError",
    "KeDiagnosis",
    "Matching",
    "OmegaCapExceeded",
    "OmegaFamily",
    "PreconditionError",
    "SizeGuardError",
    "TheoremReport",
    "TheoremViolation",
    "Verdict",
    "alpha",
    "closed_neighborhood",
    "core",
    "corona",
    "critical_difference",
    "critical_profile",
    "diagnose",
    "difference",
    "embed_non_ke",
    "encode_graph6",
    "enumerate_independent_sets",
    "from_edge_list",
    "induced_subgraph",
    "is_critical_set",
    "is_independent",
    "is_ke",
    "is_unicyclic",
    "matching_from_into",
    "maximum_matching",
    "mu",
    "neighborhood",
    "omega",
    "parse_edge_text",
    "parse_graph6",
]
