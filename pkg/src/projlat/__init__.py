"""Projection orders of special dagger Frobenius algebras, on two backends.

The package builds finite-dimensional matrix algebras and relational groupoid
algebras behind one morphism interface, derives their projection families, and
analyzes the resulting orders: meets, joins, lattice laws, orthogonality, and
how the structure composes under tensor.
"""

from .backend import (
    DEFAULT_TOL,
    FHILB,
    REL,
    Morphism,
    ObjectRef,
    Tolerance,
    compose,
    dagger,
    equal,
    fhilb_morphism,
    fhilb_object,
    identity,
    rel_morphism,
    rel_object,
    residual,
    swap,
    tensor,
    tensor_objects,
    unit_object,
    zero_morphism,
)
from .cstar import (
    basis_algebra,
    direct_sum,
    is_matrix_projection,
    matrix_from_point,
    pants_algebra,
    point_from_matrix,
    random_projection,
    subspace_join,
    subspace_meet,
    vector_point,
    zero_one_points,
)
from .errors import (
    BackendMismatch,
    CompositionTypeError,
    LawViolation,
    ParseError,
    ResourceLimit,
    Violation,
)
from .frobenius import (
    AXIOM_NAMES,
    AxiomReport,
    FrobeniusAlgebra,
    Point,
    check_axioms,
    commutativity_defect,
    conjugate_point,
    induced_cap,
    induced_cup,
    is_central,
    is_commutative,
    is_copyable,
    is_projection,
    is_zero_projection,
    mult_points,
    points_equal,
    unit_point,
    zero_point,
)
from .groupoid import (
    CopyablesReport,
    Groupoid,
    Mor,
    Subgroupoid,
    brute_force_subgroupoids,
    canonical_subset_name,
    connected_components,
    copyables_report,
    cyclic,
    dihedral,
    disjoint_union,
    element_order,
    enumerate_copyables,
    enumerate_subgroupoids,
    groupoid_violations,
    interval,
    is_abelian,
    is_cyclic_group,
    klein4,
    point_names,
    product,
    quaternion8,
    subgroupoid_points,
    subset_point,
    symmetric3,
    to_algebra,
    validate,
)
from .order import (
    EquivalenceReport,
    LatticeReport,
    OrderComparison,
    OreReport,
    OrthogonalityReport,
    PairCheck,
    ProbeEntry,
    ProbeReport,
    ProjectionPoset,
    build_poset,
    check_orthogonality_axioms,
    commute_glb_equivalence,
    compare_orders,
    forbidden_sublattices,
    hasse_edges,
    inclusion_poset,
    lattice_report,
    orthocomplement_probe,
    ore_crossvalidate,
    to_dot,
)
from .serialize import (
    CliReport,
    REPORT_KINDS,
    algebra_from_doc,
    algebra_to_doc,
    detect_document,
    dump_json,
    groupoid_from_doc,
    groupoid_to_doc,
    load_json,
    matrix_from_doc,
    matrix_to_doc,
    morphism_from_doc,
    morphism_to_doc,
    object_from_doc,
    object_to_doc,
    parse_report,
)
from .tensoralg import (
    BiOrderReport,
    TensorAlgebra,
    bi_order_check,
    derived_zero_point,
    middle_swap,
    tensor_algebras,
    tensor_points,
    zero_endo,
    zero_scalar,
)

__version__ = "0.1.0"
