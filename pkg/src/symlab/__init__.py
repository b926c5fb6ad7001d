"""symlab: exact symmetry analysis for parametrized families of
finite-dimensional algebras and for four-line configurations in the plane."""

from .fields import (
    ExtensionField,
    Field,
    FieldElement,
    FieldError,
    GF,
    PrimeField,
    QQ,
    RationalField,
    parse_field_spec,
    primitive_cube_root,
    rationals_with_cube_root,
)
from .poly import (
    FunctionField,
    MultiPoly,
    Pole,
    RationalFunction,
    UniPoly,
    ratfunc_equal,
)
from .linalg import Matrix, laplace_det
from .quotient import (
    AlgebraElement,
    AlgebraHom,
    AutDescription,
    FpaDecomposition,
    MonogenicAlgebra,
    SubstitutionMap,
    aut_description,
    brute_force_automorphisms,
    fpa_decompose,
    idempotents,
    split_roots,
    vandermonde_pair,
)
from .chi import Chi, all_chis, chi_compose, chi_power, no_s3_check, order_class
from .families import (
    InternalInconsistencyError,
    PermAutomorphism,
    PoleAt,
    RootFamily,
    SurvivalCondition,
    SurvivalReport,
    Survives,
    analyze_at,
    conjugate_through_iso,
    normalize_scaled_triple,
    perm_coeff_vector,
    scaled_family,
    specialize_scaled,
    survival_condition,
    surviving_subgroup,
)
from .structure import (
    AutPair,
    LinearAlgebraMap,
    StructureConstAlgebra,
    algebra_from_json,
    build_T,
    compose_pair,
    limit_map_at_zero,
    pair_to_map,
    transport_aut,
)
from .lines import (
    Config4,
    Isometry,
    Line,
    design_isometries,
    generic_symmetry,
    pair_relation,
    pivot_family,
    sweep,
)
from .parse import ParseError, parse_cycles, parse_ratfunc

__all__ = [name for name in dir() if not name.startswith("_")]
