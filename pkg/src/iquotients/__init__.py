"""Inverse semigroups of left I-quotients: hulls, I-orders, lifting, gluing.

The package studies pairs (Q, S) where every element of the inverse
semigroup Q factors as an inverse of a member times a member.  It builds
inverse hulls of left ample semigroups out of partial right translations,
audits I-order and straightness verdicts, lifts member morphisms to the
ambient semigroups, glues semilattice diagrams of monoids, and walks the
round trips between left ample (LC) carriers and bisimple inverse pairs.
"""

from .assembly import (
    AssemblyResult,
    BuiltSemilattice,
    SemilatticeDiagram,
    ample_semilattice_report,
    assemble_hull_semilattice,
    build_strong_semilattice,
    extract_strong_structure,
    load_diagram,
)
from .charts import PartialBijection, closure
from .enumeration import (
    FILTER_NAMES,
    MAX_ORDER,
    enumerate_semigroups,
    monoid_tables,
    semilattice_tables,
)
from .equiv import (
    BisObject,
    LacObject,
    check_nat_hull,
    naturality_order,
    naturality_pair,
    order_of_morphism,
    order_of_pair,
    pair_of_morphism,
    pair_of_order,
    roundtrip_order,
    roundtrip_pair,
)
from .errors import ConsistencyError, InputError, ResourceError
from .hull import (
    HullResult,
    bisimple_hull_equivalence,
    has_lc,
    inverse_hull,
    lc_witness,
    left_ideal,
    nat_hull,
    nat_hull_apply,
    nat_hull_embedding,
    quotient_chart,
    remark_identities,
    rho,
)
from .inverse import (
    BrandtSemigroup,
    InverseSemigroupView,
    brandt,
    is_bisimple,
    is_e_unitary,
    is_proper,
    is_simple,
    recognize_inverse,
    sigma,
    sigma_relation,
)
from .iorder import (
    AMPLE_SUITE_CLAUSES,
    BicyclicEmbedding,
    E_UNITARY_CLAUSES,
    SubsetEmbedding,
    ample_iorder_suite,
    cross_equation_holds,
    e_unitary_equivalence,
    is_classical_left_order,
    is_left_i_order,
    is_straight,
    quotient_equality_witness,
    quotient_witness,
    t_relation,
)
from .lifting import (
    HullLiftResult,
    IsoOutcome,
    LiftOutcome,
    hull_embedding,
    is_lc_preserving,
    iso_over_s,
    lift_between_hulls,
    lift_morphism,
)
from .morphisms import Morphism, enumerate_morphisms
from .relations import (
    RelationTable,
    check_rstar_l_commute,
    compose_relations,
    green,
    idempotents_commute,
    is_cancellative,
    is_left_ample,
    plus_of,
    r_star,
)
from .symbolic import (
    SymbolicSemigroup,
    additive_naturals,
    bicyclic,
    free_monoid_rank2,
)
from .tables import FiniteSemigroup

__version__ = "0.1.0"

__all__ = [
    "AMPLE_SUITE_CLAUSES",
    "AssemblyResult",
    "BicyclicEmbedding",
    "BisObject",
    "BrandtSemigroup",
    "BuiltSemilattice",
    "ConsistencyError",
    "E_UNITARY_CLAUSES",
    "FILTER_NAMES",
    "FiniteSemigroup",
    "HullLiftResult",
    "HullResult",
    "InputError",
    "InverseSemigroupView",
    "IsoOutcome",
    "LacObject",
    "LiftOutcome",
    "MAX_ORDER",
    "Morphism",
    "PartialBijection",
    "RelationTable",
    "ResourceError",
    "SemilatticeDiagram",
    "SubsetEmbedding",
    "SymbolicSemigroup",
    "additive_naturals",
    "ample_iorder_suite",
    "ample_semilattice_report",
    "assemble_hull_semilattice",
    "bicyclic",
    "bisimple_hull_equivalence",
    "brandt",
    "build_strong_semilattice",
    "check_nat_hull",
    "check_rstar_l_commute",
    "closure",
    "compose_relations",
    "cross_equation_holds",
    "e_unitary_equivalence",
    "enumerate_morphisms",
    "enumerate_semigroups",
    "extract_strong_structure",
    "free_monoid_rank2",
    "green",
    "has_lc",
    "hull_embedding",
    "idempotents_commute",
    "inverse_hull",
    "is_bisimple",
    "is_cancellative",
    "is_classical_left_order",
    "is_e_unitary",
    "is_lc_preserving",
    "is_left_ample",
    "is_left_i_order",
    "is_proper",
    "is_simple",
    "is_straight",
    "iso_over_s",
    "lc_witness",
    "left_ideal",
    "lift_between_hulls",
    "lift_morphism",
    "load_diagram",
    "monoid_tables",
    "nat_hull",
    "nat_hull_apply",
    "nat_hull_embedding",
    "naturality_order",
    "naturality_pair",
    "order_of_morphism",
    "order_of_pair",
    "pair_of_morphism",
    "pair_of_order",
    "plus_of",
    "quotient_chart",
    "quotient_equality_witness",
    "quotient_witness",
    "r_star",
    "recognize_inverse",
    "remark_identities",
    "rho",
    "roundtrip_order",
    "roundtrip_pair",
    "semilattice_tables",
    "sigma",
    "sigma_relation",
    "t_relation",
]
