"""Exact combinatorics of simplicial affine semigroups and the root
geometry of the derivation Lie algebras of their semigroup rings."""

from .classify import (
    ClassificationReport,
    Status,
    Verdict,
    classification_report,
    cm_defect,
    cm_type_numerical,
    default_bound,
    is_buchsbaum,
    is_cohen_macaulay,
    is_gorenstein_numerical,
    pseudo_members,
    pushed_into_by_face,
    stabilizes,
)
from .errors import (
    BoundMismatchError,
    DimensionMismatchError,
    EmptyGeneratorsError,
    NegativeEntryError,
    NoRootsError,
    NotNumericalError,
    NotRealizableError,
    NotSimplicialError,
    NotStandardError,
    SemirootError,
    ZeroGeneratorError,
)
from .lattice import (
    RationalSubspace,
    group_contains,
    hermite_normal_form,
    lattice_rank,
    solve_rational_kernel,
    subspace_from_span,
)
from .liealg import (
    CocycleSolution,
    Derivation,
    RingElement,
    degree_zero_cocycles,
    derived_cartan_dimension,
    in_derivation_algebra,
    is_product_along_line,
)
from .reconstruct import (
    Fingerprint,
    enumerate_numerical_gap_sets,
    fingerprint,
    fingerprints_equal,
    gorenstein_reconstruct,
    is_symmetric_gap_set,
    numerical_semigroup_from_gaps,
    ordinary_from_fingerprint,
)
from .roots import (
    RootKind,
    RootSpace,
    RootTable,
    exceptional_generators,
    exceptional_roots,
    is_axis_root,
    is_exceptional_root,
    regenerate_exceptional,
    root_space,
    root_space_box_scan,
    root_table,
)
from .semigroup import (
    AffineSemigroup,
    AxisData,
    NumericalProfile,
    StandardReport,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
