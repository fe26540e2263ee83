"""Exact checks of a braid relation, its Dehn twist shadow on homology, and
the invariants of the resulting Lefschetz fibrations."""

from .artin import FreeAuto, artin_generator, braid_equal, evaluate
from .braid import (
    BraidWord,
    Permutation,
    bar_delta,
    beta,
    beta_k,
    delta,
    gamma,
    gamma_k,
    lemma_identity_sides,
    theorem3_sides,
    to_permutation,
)
from .fpgroup import (
    AbelianGroup,
    Presentation,
    abelianization,
    paper_presentation,
    tietze_eliminate,
    vanishing_cycle_classes,
)
from .homology import (
    HClass,
    TwistWord,
    chain_boundary_classes,
    curve_class,
    evaluate_twistword,
    hyperelliptic_matrix,
    intersection,
    transvection,
)
from .invariants import (
    FibrationData,
    InvariantReport,
    betti_report,
    endo_signature,
    euler_characteristic,
    is_positive_definite,
    matrix_A,
    odd_g_deduction,
)
from .snf import smith_normal_form
from .words import Word, conjugate, invert, multiply, parse_word, power, reduce

__version__ = "0.1.0"
