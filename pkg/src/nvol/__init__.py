"""Normalized-volume toolkit for klt hypersurface and threefold singularities.

Core pieces: exact polynomial supports and monomial valuations, the
weighted-blow-up upper bound for local volumes (exact and numeric), its
minimization over positive weights with a rational grid oracle, a catalog
of known threefold local volumes and mlds, and K-moduli screening by
anticanonical volume.
"""

__version__ = "0.1.0"

from .catalog import (
    Ak,
    CAClass,
    CatalogEntry,
    Classification,
    CubicFamily,
    CyclicQuotient,
    Dk,
    Ek,
    HypersurfaceSupport,
    INFINITY,
    Interval,
    KnownVolume,
    NvMldCheck,
    QuotientOrder,
    Smooth,
    TransversalADE,
    ade_family_volume,
    catalog_volume,
    check_nv_mld,
    classify_volume_ge_9,
    cover_transfer,
    defining_support,
    known_volume_list,
    mld_of,
    parse_descriptor,
    quotient_volume,
)
from .errors import (
    ComputationError,
    DescriptorError,
    DimensionMismatchError,
    InputError,
    InvalidWeightError,
    NoValidWeightError,
    NvolError,
    ParseError,
    SupportError,
    UndecidableClassError,
    UnknownMldError,
    UnknownVolumeError,
)
from .optimizer import (
    BoundResult,
    OptimizerOptions,
    Status,
    grid_search,
    local_refine,
    minimize_bound,
    normalize_weight,
)
from .screener import ScreeningReport, allowed_shrinks, liu_lower_bound, screen_fano
from .squarefree import is_reduced_bivariate
from .support import (
    PolySupport,
    infer_nvars,
    multiplicity,
    parse_polynomial,
    prune_support,
)
from .surd import Rational, SurdValue
from .valuation import (
    BoundEvaluation,
    ValuationResult,
    WeightVector,
    monomial_valuation,
    nv_bound,
)

__all__ = [
    "__version__",
    "Ak", "CAClass", "CatalogEntry", "Classification", "CubicFamily",
    "CyclicQuotient", "Dk", "Ek", "HypersurfaceSupport", "INFINITY",
    "Interval", "KnownVolume", "NvMldCheck", "QuotientOrder", "Smooth",
    "TransversalADE", "ade_family_volume", "catalog_volume", "check_nv_mld",
    "classify_volume_ge_9", "cover_transfer", "defining_support",
    "known_volume_list", "mld_of", "parse_descriptor", "quotient_volume",
    "ComputationError", "DescriptorError", "DimensionMismatchError",
    "InputError", "InvalidWeightError", "NoValidWeightError", "NvolError",
    "ParseError", "SupportError", "UndecidableClassError", "UnknownMldError",
    "UnknownVolumeError",
    "BoundResult", "OptimizerOptions", "Status", "grid_search", "local_refine",
    "minimize_bound", "normalize_weight",
    "ScreeningReport", "allowed_shrinks", "liu_lower_bound", "screen_fano",
    "is_reduced_bivariate",
    "PolySupport", "infer_nvars", "multiplicity", "parse_polynomial",
    "prune_support",
    "Rational", "SurdValue",
    "BoundEvaluation", "ValuationResult", "WeightVector", "monomial_valuation",
    "nv_bound",
]
