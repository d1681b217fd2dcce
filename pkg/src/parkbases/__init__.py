"""
parkbases: exact combinatorics linking parking functions, ordered root bases
with upper-triangular Seifert matrix, braid mutations, exceptional sequences
of quiver representations, and maximal chains of non-crossing partitions.

All objects are immutable values, every operation is pure, and nothing here
uses floating point.
"""
from .bijection import (
    initial_vector,
    reconstruct,
    reconstruct_geometric,
    reconstruct_permutation,
)
from .braid import (
    OrbitGraph,
    apply_word,
    apply_word_parking,
    arc_mutation_target,
    flip_row,
    generator_order,
    mutate,
    mutate_diagram,
    mutate_parking,
    orbit_graph,
    parse_word,
    young_diagrams,
    young_of_diagram,
)
from .dbasis import (
    ArcDiagram,
    BasisError,
    basis_count,
    distinguished_bases,
    from_arcs,
    gap,
    is_basis,
    nondecreasing_representative,
    right_orthogonal_basis,
    span,
    to_arcs,
    validate_basis,
)
from .noncrossing import (
    NCChain,
    NCPartition,
    chain_to_basis,
    maximal_chains,
    partition_chain,
    stanley_labels,
)
from .parking import (
    DyckPath,
    ParkingDiagram,
    catalan,
    from_diagram,
    from_dyck,
    is_parking,
    nondecreasing_parking_functions,
    parking_functions,
    to_diagram,
    to_dyck,
)
from .quiver import (
    IntervalModule,
    ext_dim,
    euler,
    filtration_level,
    hom_dim,
    hom_dim_oracle,
    hom_ext_table,
    is_exceptional_sequence,
    is_nondecreasing_collection,
    modules_of,
)
from .roots import Root, SignedRoot, cartan, positive_roots, seifert, simple_roots, support_relation

__all__ = [
    "ArcDiagram",
    "BasisError",
    "DyckPath",
    "IntervalModule",
    "NCChain",
    "NCPartition",
    "OrbitGraph",
    "ParkingDiagram",
    "Root",
    "SignedRoot",
    "apply_word",
    "apply_word_parking",
    "arc_mutation_target",
    "basis_count",
    "cartan",
    "catalan",
    "chain_to_basis",
    "distinguished_bases",
    "ext_dim",
    "euler",
    "filtration_level",
    "flip_row",
    "from_arcs",
    "from_diagram",
    "from_dyck",
    "gap",
    "generator_order",
    "hom_dim",
    "hom_dim_oracle",
    "hom_ext_table",
    "initial_vector",
    "is_basis",
    "is_exceptional_sequence",
    "is_nondecreasing_collection",
    "is_parking",
    "maximal_chains",
    "modules_of",
    "mutate",
    "mutate_diagram",
    "mutate_parking",
    "nondecreasing_parking_functions",
    "nondecreasing_representative",
    "orbit_graph",
    "parking_functions",
    "parse_word",
    "partition_chain",
    "positive_roots",
    "reconstruct",
    "reconstruct_geometric",
    "reconstruct_permutation",
    "right_orthogonal_basis",
    "seifert",
    "simple_roots",
    "span",
    "stanley_labels",
    "support_relation",
    "to_arcs",
    "to_diagram",
    "to_dyck",
    "validate_basis",
    "young_diagrams",
    "young_of_diagram",
]
