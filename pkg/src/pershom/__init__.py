"""Persistent homology of finite filtered complexes and the surrounding
algebra: barcodes, persistence diagrams, cap numbers and generalized Morse
inequalities, bottleneck distance, and nerve/Vietoris duality."""

from .barcode import (
    Barcode,
    ConstancyWitness,
    Interval,
    barcode_rank,
    constancy_witness,
    interval_module_rank,
    radical,
)
from .bottleneck import (
    MatchingResult,
    TooLargeError,
    bottleneck,
    bottleneck_bruteforce,
    interleaving_distance,
    matching_at,
)
from .covers import (
    Cover,
    SimplicialComplex,
    balls_cover,
    dowker_check,
    homology_ranks,
    nerve,
    vietoris,
)
from .diagram import DiagramPoint, PersistenceDiagram, diagram_of, quadrant_count
from .extreal import NEG_INF, POS_INF, ExtendedReal
from .filtration import (
    ComplexValidationError,
    DuplicateSimplexError,
    FilteredComplex,
    MissingFaceError,
    MissingVertexValueError,
    NonMonotoneError,
    betti_at,
    betti_numbers,
    compute_persistence,
    euler_profile,
    lower_star,
    validate,
)
from .gallery import (
    DouglasInput,
    HawaiianSpec,
    douglas_eval,
    hawaiian_complex,
    hawaiian_rank_sweep,
    product_family,
)
from .linalg import GF2, GF3, PrimeField
from .morse import (
    MorseReport,
    PreconditionViolated,
    cap_finiteness_bound,
    cap_number,
    cap_number_at,
    essential_dimension,
    morse_check,
    nu,
)

__version__ = "0.1.0"

__all__ = [
    "Barcode",
    "ConstancyWitness",
    "Cover",
    "DiagramPoint",
    "DouglasInput",
    "ExtendedReal",
    "FilteredComplex",
    "GF2",
    "GF3",
    "HawaiianSpec",
    "Interval",
    "MatchingResult",
    "MorseReport",
    "NEG_INF",
    "POS_INF",
    "PersistenceDiagram",
    "PrimeField",
    "SimplicialComplex",
    "TooLargeError",
    "ComplexValidationError",
    "DuplicateSimplexError",
    "MissingFaceError",
    "MissingVertexValueError",
    "NonMonotoneError",
    "PreconditionViolated",
    "balls_cover",
    "barcode_rank",
    "betti_at",
    "betti_numbers",
    "bottleneck",
    "bottleneck_bruteforce",
    "cap_finiteness_bound",
    "cap_number",
    "cap_number_at",
    "compute_persistence",
    "constancy_witness",
    "diagram_of",
    "douglas_eval",
    "dowker_check",
    "essential_dimension",
    "euler_profile",
    "hawaiian_complex",
    "hawaiian_rank_sweep",
    "homology_ranks",
    "interleaving_distance",
    "interval_module_rank",
    "lower_star",
    "matching_at",
    "morse_check",
    "nerve",
    "nu",
    "product_family",
    "quadrant_count",
    "radical",
    "validate",
    "vietoris",
]
