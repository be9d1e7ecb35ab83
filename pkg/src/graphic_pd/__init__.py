"""Exact computations for graphic hyperplane arrangements and their derivation modules."""

from .arrangement import (
    Arrangement,
    ConsistencyError,
    PreconditionError,
    betti_arrangement,
    betti_graph,
    derivation_generators,
    derivation_module,
    flats,
    graphic_arrangement,
    is_generic,
    localization,
    pd_arrangement,
    pd_graph,
    resolve_derivation_module,
    restriction,
    saito_check,
    terao_b,
)
from .derivation import Derivation
from .graphio import GraphParseError, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6
from .graphs import (
    EdgeSequence,
    Graph,
    canonical_string,
    complement,
    completion_sequence,
    enumerate_graphs,
    is_chordal,
    is_weakly_chordal,
    standard_graph,
    weak_chordality_witness,
)
from .groebner import (
    BettiTable,
    FreeModule,
    FreeModuleElement,
    GroebnerBasis,
    groebner_basis,
    ideal_membership,
    minimal_free_resolution,
    module_kernel,
    projective_dimension,
)
from .hilbert import hilbert_oracle
from .poly import Polynomial, determinant, elementary_symmetric

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
