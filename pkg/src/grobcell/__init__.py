"""Exact parametrization of Groebner cells of Artinian ideals in K[x, y]
by canonical Hilbert-Burch matrices, with the projective lift to K[x, y, z]
and Betti-stratum computations."""

from .betti import (
    BettiTable,
    ResolutionDegrees,
    betti_numbers,
    block_matrix,
    index_sets,
    matrix_rank,
    resolution_degrees,
    strata_codim,
    strata_codim_total,
)
from .canonical import (
    RawSyzygyMatrix,
    canonicalize,
    extract_syzygies,
    prepare_basis,
    reduction_move,
)
from .cell import (
    MonomialCell,
    below_diagonal_stats,
    bound_matrix,
    cell_from_minimal_generators,
    degree_matrix,
    dimension,
    dimension_bounds,
    enumerate_lex_segment_cells,
    hilbert_function,
    lex_betti,
    make_cell,
    param_count,
    special_indices,
)
from .errors import GrobcellError, InternalError, ValidationError
from .field import GF, QQ, char_ok, is_prime
from .groebner import (
    DivisionResult,
    GroebnerBasis,
    buchberger,
    divide,
    initial_ideal,
    is_groebner,
    minimalize_homogeneous,
    s_polynomial,
)
from .hilburch import (
    IdealBasis,
    ParamMatrix,
    check_membership,
    determinant,
    hb_matrix,
    param_matrix_from_json,
    param_matrix_from_strings,
    param_matrix_to_json,
    psi,
    sample,
    verify_groebner_property,
    zero_matrix,
)
from .poly import Poly, dehomogenize, format_poly, homogenize, parse_poly, uni_divmod, variable
from .projective import (
    HomIdealBasis,
    homogenize_matrix,
    ideal_dehomogenize,
    ideal_homogenize,
    psi_bar,
    z_regular,
)

__version__ = "0.1.0"
