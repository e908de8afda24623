"""Exact workbench for finite-dimensional algebras given by structural constants."""
from .algebra import (
    Field,
    PropertyReport,
    StructureConstants,
    find_unit,
    is_associative,
    is_commutative,
    multiply,
)
from .conjugation import (
    ConjugationSpec,
    antilinear_right_mul_map,
    check_conjugation,
    conjugate,
    right_mul_map,
    split_element,
)
from .cstar import (
    InvolutionReport,
    NormedAlgebra,
    NormKind,
    check_involution,
    conjugate_transpose_involution,
    cstar_identity_check,
    matrix2x2_algebra,
    normalize_basis,
    transpose_operator,
    unvec2x2,
    vec2x2,
)
from .maps import (
    Basis,
    Classification,
    MapKind,
    MapMatrix,
    apply_map,
    complex_form,
    decompose_additive,
    is_antilinear,
    is_antilinear_homomorphism,
    is_c_linear,
    is_homomorphism,
    precompose_conjugation,
)
from .quaternion import (
    AutomorphismReport,
    enumerate_signed_perm_automorphisms,
    inner_automorphism,
    quaternion_constants,
    verify_automorphism,
)
from .realification import RealifiedConstants, embed_coords, realify, split_constants
from .scalars import GaussianRational, conj_scalar, parse_scalar

__version__ = "0.1.0"
