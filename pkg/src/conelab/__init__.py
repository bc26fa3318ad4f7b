"""Exact cones, lattices, affine monoids and Frobenius splittings over F_p."""
from .quadratic import QuadNum, sign, sign_transcript
from .lattice import (
    LatticeSection,
    NotSaturatedError,
    hnf,
    saturate_subgroup,
    snf,
    split_quotient,
    sublattice_intersection,
)
from .cone import (
    Cone,
    HalfSpace,
    NotInCone,
    Polytope,
    Ray,
    affine_section_cone,
    caratheodory,
    closure,
    contains,
    cross_section,
    dual,
    extremal_rays,
    face,
    h_to_v,
    hyperplane_section,
    lineality,
    quotient_by_lineality,
    relint_contains,
    v_to_h,
)
from .monoid import AffineMonoid, HilbertBasis, Undecided, hilbert_basis, is_normal, monoid_membership, saturation
from .frobenius import (
    AlgebraElement,
    FacetProfile,
    SplitDescriptor,
    Verdict,
    WitnessNotFound,
    WitnessReport,
    apply_pi,
    enumerate_M_alpha_e,
    facet_profile,
    hyperplane_projection_split,
    is_split_F_regular,
    minimal_split_e,
    preserves_subalgebra,
    quotient_summand_maps,
    splitting_condition,
    synthesize_splitting,
    verify_witness,
    witness_violation,
)
from .diophantine import RationalDirection, dense_approx
from .grval import (
    MonomialValuation,
    NonInjective,
    gr_is_finitely_generated_if_SFR,
    graded_ring_presentation,
    value_monoid,
)

__version__ = "0.1.0"
