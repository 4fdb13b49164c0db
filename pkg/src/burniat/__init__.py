"""Exact computations for Burniat surfaces and their branch configurations."""
from .errors import (
    BurniatError,
    DegenerateConfigError,
    DegeneratePointError,
    DimensionMismatchError,
    DomainError,
    InconclusiveError,
    InputError,
    InternalConsistencyError,
    InvalidBurniatError,
    UnsupportedCaseError,
)
from .lattice import (
    DivisorClass,
    Effectivity,
    EffectivityResult,
    SurfaceLattice,
    canonical_class,
    euler_characteristic,
    intersect,
    is_effective,
)
from .curves import (
    enumerate_minus1_classes,
    enumerate_minus2_classes,
    lines_on_weak_dp,
    max_line_count,
)
from .plane import (
    BurniatConfig,
    ProjLine,
    ProjPoint,
    build_burniat_lines,
    classify,
    find_triple_points,
    is_weak_del_pezzo_pointset,
)
from .branch import (
    bidouble_fiber_check,
    branch_table,
    k_squared,
    natural_deformations_galois,
    verify_branch_identities,
)
from .cohomology import chi_log, eigenspace_table, h0_log_eigensheaf, moduli_dim, rr_chi
from .invariants import (
    act5,
    act6,
    invariants5,
    invariants6,
    quadratic_extension_check5,
    verify_invariants,
)

__version__ = "0.1.0"
