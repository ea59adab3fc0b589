"""Exact computation with Hopf module algebras and their radicals."""

from .fields import FieldSpec, GF, QQ
from .linalg import (
    Matrix,
    Subspace,
    contains,
    enumerate_subspaces,
    full_subspace,
    intersect,
    is_subspace_of,
    rref,
    span,
    subspace_sum,
    zero_subspace,
)
from .algebra import (
    FiniteDimAlgebra,
    HopfAlgebraData,
    ValidationReport,
    find_unit,
    left_integrals,
    multiply,
    normalized_integral,
    trivial_hopf,
    validate_algebra,
    validate_hopf,
)
from .action import (
    HModuleAlgebra,
    act_image,
    check_conjugation_identity,
    colon_ideal,
    quotient_action,
    smash_product,
    validate_action,
)
from .ideals import (
    enumerate_h_ideals,
    h_annihilator_star,
    h_ideal_generated,
    ideal_power,
    ideal_product,
    is_h_ideal,
    is_h_simple,
    nilpotency_index,
)
from .radicals import (
    MSequence,
    RadicalResult,
    TheoremViolation,
    Unsupported,
    baer_chain,
    brown_mccoy_by_enumeration,
    central_primitive_idempotents,
    comparison_report,
    fisher_radical,
    gt_member,
    gt_radical,
    gt_subspace,
    h_baer_radical,
    h_brown_mccoy_radical,
    h_jacobson_radical,
    h_locally_nilpotent_radical,
    is_h_prime,
    is_h_semiprime,
    nilradical,
    smash_radical_restricted,
    wh_membership,
)
from .fixtures import builtin_fixtures, fixture_by_name

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
