"""Odd, proper conflict-free and h-odd colouring toolkit.

Core objects (Graph, Hypergraph, PairGH, Colouring), validators with exact
parity bookkeeping, a deterministic greedy colourer with witness repair,
capped-resampling randomized colourers, an exact branch-and-bound oracle,
extremal constructions, and high-precision bound evaluators.
"""

from .audit import (
    OddAudit,
    Violation,
    audit_incremental,
    is_h_odd_colouring,
    is_odd_colouring,
    is_odd_pair_colouring,
    is_pcf_colouring,
    is_proper,
    odd_colours,
)
from .core import (
    Colouring,
    Graph,
    Hypergraph,
    InternalInvariantError,
    PairGH,
    SolveOutcome,
    degeneracy,
    induced_subhypergraph,
    neighbourhood_hypergraph,
    vplus_split,
)
from .exact import Budget, as_pair, chromatic_number, decide, enumerate_decide, verify_lower_bound
from .greedy import degeneracy_order, greedy_hodd, greedy_odd, odd_palette_bound, random_order
from .sampler import (
    ResampleSchedule,
    SubsetSample,
    TrialRecord,
    chi_bound_colour,
    hodd_delta_colour,
    hodd_product_colour,
    product_colour,
    sample_subset,
    two_phase_colour,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "Colouring",
    "Graph",
    "Hypergraph",
    "InternalInvariantError",
    "OddAudit",
    "PairGH",
    "ResampleSchedule",
    "SolveOutcome",
    "SubsetSample",
    "TrialRecord",
    "Violation",
    "as_pair",
    "audit_incremental",
    "chi_bound_colour",
    "chromatic_number",
    "decide",
    "degeneracy",
    "degeneracy_order",
    "enumerate_decide",
    "greedy_hodd",
    "greedy_odd",
    "hodd_delta_colour",
    "hodd_product_colour",
    "induced_subhypergraph",
    "is_h_odd_colouring",
    "is_odd_colouring",
    "is_odd_pair_colouring",
    "is_pcf_colouring",
    "is_proper",
    "neighbourhood_hypergraph",
    "odd_colours",
    "odd_palette_bound",
    "product_colour",
    "random_order",
    "sample_subset",
    "two_phase_colour",
    "verify_lower_bound",
    "vplus_split",
]
