"""Interior and exterior polynomials of hypergraphs, with executable checks
of the facts that make them well defined."""

from .activity import (
    ActivityProfile,
    Fiber,
    IntPolynomial,
    TransferTable,
    activity_profile,
    exterior_polynomial,
    fiber_decomposition,
    interior_polynomial,
    verify_order_independence,
)
from .corpus import generate_corpus, random_hypergraph
from .errors import (
    BudgetExceeded,
    DisconnectedError,
    DomainMismatchError,
    DuplicateIdentifierError,
    EmptyHyperedgeError,
    HypergraphError,
    LoopError,
    ParseError,
    UndeclaredVertexError,
    UnknownHyperedgeError,
)
from .hypergraph import (
    BipartiteGraph,
    Hypergraph,
    Multigraph,
    build_bipartite,
    graph_to_hypergraph,
    hypergraph_from_document,
    hypergraph_to_document,
    is_connected,
    mu,
    parse_graph,
    parse_hypergraph,
)
from .hypertrees import (
    TransferMove,
    candidate_maps,
    enumerate_hypertrees,
    enumerate_hypertrees_by_transfer,
    find_realization,
    is_hypertree,
    is_hypertree_polymatroid,
    is_tight,
    tight_family,
    transfer_valid,
    transfer_valid_by_tightness,
)
from .lemmas import verify_lemmas
from .proof import verify_transposition_proof
from .report import Check, Report
from .tutte import (
    TuttePolynomial,
    crosscheck_specialization,
    tutte_by_activities,
    tutte_deletion_contraction,
)

__version__ = "0.1.0"
