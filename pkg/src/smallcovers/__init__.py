"""Small covers of simple polytopes, their mod-2 homology, and rank-gradient bounds
along towers of face doublings."""

from .covers import (
    Coloring,
    CoverClassification,
    count_characteristic,
    enumerate_characteristic,
    equivalence_classes,
    find_orientable,
    is_characteristic,
    is_orientable,
    parse_coloring,
    serialize_coloring,
)
from .errors import ColoringError, InvalidPolytopeError, PolytopeParseError, SmallCoverError
from .gradient import (
    atkinson_check,
    b1_bound_sequence,
    closed_form_limit,
    commensurable_bounds,
    rgr_ratios,
    rs_upper_bound,
)
from .homology import QuotientComplex, betti_mod2, build_quotient_complex, verify_dj
from .hvector import PhiPolynomial, h1_closed_form, h_vector, phi_polynomial
from .polytope import (
    FacePermutation,
    Polytope,
    ValidationReport,
    automorphism_group,
    builtin,
    f_vector,
    parse_polytope,
    pogorelov_check,
    serialize_polytope,
    validate,
)
from .tower import TowerState, build_tower, double, propagate_coloring

__version__ = "0.1.0"
