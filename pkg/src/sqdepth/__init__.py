"""Exact Hilbert depth, dimension and depth for squarefree monomial quotients."""

__version__ = "0.1.0"

from .errors import CapExceededError, InvalidPairError, ParseError, SqdepthError
from .ideals import (
    DEFAULT_ENUMERATION_CAP,
    IdealPair,
    Monomial,
    MonomialIdeal,
    RingContext,
    colon,
    intersect,
    minimalize,
    parse_ideal,
)
from .complexes import (
    FVector,
    RelativeComplex,
    SimplicialComplex,
    complex_of_ideal,
    f_vector,
    ideal_of_complex,
    link,
    pair_of_relative,
    relative_of_pair,
    skeleton,
)
from .invariants import (
    AlphaVector,
    BetaVector,
    alpha,
    alpha_from_beta,
    beta,
    beta_recurrence_check,
    dim_module,
    dim_module_colon,
    h_vector,
    hdepth,
    hdepth_of_alpha,
)
from .macaulay import (
    MacaulayExpansion,
    binomial,
    chu_vandermonde_check,
    cm_admissible,
    expand,
    macaulay_growth_bound,
    pseudopower,
)
from .homology import (
    RATIONALS,
    ChainComplexRanks,
    CmVerdict,
    CoefficientField,
    depth,
    is_cm_relative,
    is_cohen_macaulay,
    reduced_homology,
    relative_homology,
)

__all__ = [
    "AlphaVector",
    "BetaVector",
    "CapExceededError",
    "ChainComplexRanks",
    "CmVerdict",
    "CoefficientField",
    "DEFAULT_ENUMERATION_CAP",
    "FVector",
    "IdealPair",
    "InvalidPairError",
    "MacaulayExpansion",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "RATIONALS",
    "RelativeComplex",
    "RingContext",
    "SimplicialComplex",
    "SqdepthError",
    "alpha",
    "alpha_from_beta",
    "beta",
    "beta_recurrence_check",
    "binomial",
    "chu_vandermonde_check",
    "cm_admissible",
    "colon",
    "complex_of_ideal",
    "depth",
    "dim_module",
    "dim_module_colon",
    "expand",
    "f_vector",
    "h_vector",
    "hdepth",
    "hdepth_of_alpha",
    "ideal_of_complex",
    "intersect",
    "is_cm_relative",
    "is_cohen_macaulay",
    "link",
    "macaulay_growth_bound",
    "minimalize",
    "pair_of_relative",
    "parse_ideal",
    "pseudopower",
    "reduced_homology",
    "relative_homology",
    "relative_of_pair",
    "skeleton",
]
