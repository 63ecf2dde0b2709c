"""Hasse diagrams of arbitrary finite lattices by border traversal."""

from .algorithms import (
    Embedding,
    TraceRecord,
    distributive_cover_test,
    generalized_border,
    generalized_ipred,
    identity_embedding,
    label_embedding,
    meet_irreducible_embedding,
    slow_cover_test,
    validate_embedding,
)
from .border import Border, candidates, cover_from_border, is_border, is_proper, minimals, standard_step
from .diagram import HasseDiagram
from .errors import (
    EmbeddingInvalid,
    HasseError,
    InputNotJoinSemilattice,
    InputSyntaxError,
    InvalidOrder,
    InvalidRankKey,
    LatticeValidationError,
    NotAPermutation,
    ParameterTooLarge,
    UnknownAttribute,
)
from .fca import (
    ConceptLattice,
    FormalContext,
    closure,
    concept_lattice,
    enumerate_intents,
    powerset_intent_embedding,
    random_context,
)
from .lattice import (
    CountingLattice,
    ExplicitLattice,
    Lattice,
    OpCounters,
    ValidationReport,
    check_axioms,
    complete_with_bottom,
    meet_via_join,
    validate_lattice,
)
from .oracle import (
    check_paper_laws,
    distributivity_witness,
    is_distributive,
    lower_cover,
    meet_irreducibles,
    oracle_hasse,
    upper_cover,
    width,
)
from .traversal import ReverseTopoStream, random_linear_extension, reverse_topo_sort, verify_reverse_topo
from .zoo import chain, divisor, fixture_fig1a, fixture_fig1b, fixture_fig2, partition, powerset

__version__ = "0.1.0"
