"""Exact-arithmetic combinatorics of rank-2 positroid face stratifications."""

from .cyclic import gale_leq
from .linalg import RationalMatrix, det_bareiss, matroid_of_columns, signed_plucker
from .matroid import (
    GrassmannNecklace,
    Matroid,
    dual,
    dual_necklace,
    envelope,
    envelope_commutes_with_dual_check,
    enumerate_positroids,
    is_matroid,
    is_positroid,
    necklace,
    positroid_from_necklace,
    twistor_down,
    uniform_matroid,
)
from .posets import (
    Poset,
    build_face_poset,
    build_q_poset,
    closure_poset_check,
    corank_gf_closed,
    corank_gf_from_poset,
    facet_hyperplane_assignment,
    flip_certificate,
    flip_involution_check,
    is_eulerian,
    is_thin,
    stratum_in_facet,
    upper_ideal_check,
)
from .rank2 import (
    FaceStats,
    LukowskiMatrix,
    Rank2Positroid,
    canonicalize,
    enumerate_face_poset_elements,
    enumerate_rank2_positroids,
    from_loops_and_t,
    from_matroid,
    lift_up,
    lukowski_matroid,
    lukowski_pattern,
)
from .schur import (
    SchurExpansion,
    class_of_lift,
    class_of_stratum,
    codim_from_class,
    lr_product,
    pieri_e,
    pieri_h,
    residual_member,
)
from .twistor import (
    injectivity_probe,
    positive_Z,
    psi_image,
    sample_cell_point,
    sample_top_cell,
    sign_flip_count,
    sign_flip_report,
    standard_form_Z,
    twistor_vector,
    verify_sign_constancy,
    verify_zero_pattern,
)

__version__ = "0.1.0"
