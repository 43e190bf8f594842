"""Homomorphisms between finitely presented multiparameter persistence modules."""

from ._core import (
    DimensionMismatch,
    Error,
    FieldError,
    FileError,
    GradingError,
    HomBasis,
    ParseError,
    PreconditionError,
    Presentation,
    ResourceError,
    betti_restricted_thickness,
    dumps,
    dumps_hom,
    hilbert,
    hom,
    hom_module,
    load,
    minimize,
    parse,
    random_module,
    resolution,
    shift,
    sparsify,
    squares_commute,
    thickness,
    truncate,
    verify_hom,
)

ALGORITHMS = ("direct", "a", "mixed", "b", "a-star", "b-star", "oracle")

__all__ = [name for name in dir() if not name.startswith("_")]
