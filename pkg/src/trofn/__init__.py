"""Exact arithmetic for trapezoidal ordered fuzzy numbers."""

from .core import (
    ExactNumber,
    NonexistentKosinskiSum,
    NonMonotonicQuadruple,
    Orientation,
    SumFailure,
    TrOFN,
    dubois_prade_sum,
    exact,
    format_exact,
    is_proper_fn_quadruple,
    kosinski_sum,
    make_tofn,
    make_trofn,
    membership,
    orientation,
    revised_sum,
)
from .spectrum import (
    AssocTree,
    CapExceeded,
    Leaf,
    Node,
    Spectrum,
    SpectrumEntry,
    Witness,
    association_spectrum,
    catalan,
    enumerate_association_trees,
    evaluate_tree,
    full_spectrum,
    left_comb,
    left_fold_sum,
    permutation_spectrum,
)

__version__ = "0.1.0"
