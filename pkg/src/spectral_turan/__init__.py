"""Local spectral Turán bounds, weighted Motzkin-Straus optimisation and
exhaustive verification on small graphs."""

from .bounds import (
    BoundLedger,
    bound_ledger,
    cvetkovic_chi,
    edwards_elphick_chi,
    gregory_rhs,
    hoffman_chi,
    local_turan_bound,
    nikiforov_bound,
    signless_conjecture_bound,
    stanley_bound,
)
from .canonical import canonical_id, enumerate_graphs, is_isomorphic
from .cliques import (
    EdgeCliqueProfile,
    chromatic_number,
    clique_number,
    complete_multipartite_parts,
    edge_clique_orders,
)
from .graph import (
    Graph,
    Graph6Error,
    PartitionSpec,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    from_graph6,
    gregory_gadget,
    is_connected,
    kite,
    path_graph,
    star,
    to_graph6,
    turan_edge_count,
    turan_graph,
    turan_minus,
)
from .lagrangian import (
    SimplexVector,
    lagrangian_value,
    maximize_lagrangian,
    maximize_weighted,
    verify_equality_support,
    weighted_value,
)
from .spectral import (
    SpectrumSummary,
    extreme_eigenvalues,
    rayleigh_quotient,
    signless_laplacian_radius,
    spectral_radius,
)

__version__ = "0.1.0"
