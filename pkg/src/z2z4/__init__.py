"""Additive codes over Z2^alpha x Z4^beta and their intersections."""

from .algebra import CodeType, MixedMatrix, MixedVector, compute_type, standard_reduce
from .code import (
    AdditiveCode,
    Monomial,
    apply_monomial,
    contains,
    enumerate_codewords,
    gray_image,
    gray_map,
    lee_weight,
    min_distance,
)
from .config import GuardExceeded, settings
from .constructions import (
    double_additive,
    double_quaternary,
    extended_hamming_parity,
    extended_perfect_z2z4_dual,
    extended_perfect_z4_dual,
    hamming_parity,
    lemma_lex_pair,
    paper_matrix,
    paper_matrix_names,
    perfect_z2z4_dual,
    quadruple_additive,
    quadruple_quaternary,
)
from .duality import dual, dual_type, inner_product
from .lattice import (
    BoundReport,
    check_dual_size_bounds,
    check_eta_bounds,
    check_span_bounds,
    eta,
    intersect,
    intersection_dual_type,
    span,
    structure_bounds,
)
from .search import (
    NotFound,
    RefutedByExhaustion,
    SearchTask,
    Witness,
    enumerate_eta,
    enumerate_types,
    search,
)
from .verify import verify_bound_theorem

__version__ = "0.1.0"
