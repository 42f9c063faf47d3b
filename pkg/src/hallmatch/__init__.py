"""Hall's marriage theorem as executable code: transversals, bipartite
matchings, carried functions, and König's lemma on finite horizons."""

from .errors import (
    CapExceeded,
    DuplicateIndex,
    FpropViolation,
    HallError,
    HorizonExceeded,
    InvalidColoring,
    PreconditionViolated,
    SelfLoop,
    UnknownElement,
    UnknownIndex,
    UnknownVertex,
)
from .families import (
    Check,
    FiniteSet,
    HallReport,
    IndexedFamily,
    Transversal,
    Verdict,
    Witness,
    bind_union,
    check_hall_condition,
    make_family,
    verify_transversal,
    verify_witness,
)
from .graphs import (
    Bipartition,
    CarriedFunction,
    Coloring,
    EdgePair,
    GraphMatching,
    SimpleGraph,
    find_carried_function,
    hall_bipartite,
    make_graph,
    neighbor_set,
    neighbor_set_image,
    saturates,
    validate_coloring,
    validate_matching,
)
from .koenig import (
    Chain,
    InverseSystem,
    LazyFamily,
    extendable_set,
    find_chain,
    infinite_hall_prefix,
    lazy_family,
    make_inverse_system,
    prune_to_extendable,
)
from .relations import FiniteRelation, family_of_relation, image_rel, make_relation, solve_relation
from .solver import (
    SolveOutcome,
    TightSet,
    deficiency_witness,
    find_tight_set,
    restrict_family,
    solve_augmenting,
    solve_inductive,
)

__version__ = "0.1.0"
