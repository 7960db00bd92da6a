"""Invariant free polynomials under finite unitary group actions."""

from ._core import (
    Basis,
    BasisError,
    CountingError,
    FreePoly,
    HatPoly,
    ParseError,
    RewriteError,
    SpectrumError,
    UnitaryRep,
    build_basis,
    check_partial_row_ball,
    count,
    evaluate,
    even_dilation,
    expand,
    is_invariant,
    parse,
    reynolds,
    rewrite,
    row_ball_max_eigenvalue,
    run_cli,
    sample_row_contraction,
    truncated_fock_shifts,
)

__all__ = [
    "Basis",
    "BasisError",
    "CountingError",
    "FreePoly",
    "HatPoly",
    "ParseError",
    "RewriteError",
    "SpectrumError",
    "UnitaryRep",
    "build_basis",
    "check_partial_row_ball",
    "count",
    "evaluate",
    "even_dilation",
    "expand",
    "is_invariant",
    "parse",
    "reynolds",
    "rewrite",
    "row_ball_max_eigenvalue",
    "run_cli",
    "sample_row_contraction",
    "truncated_fock_shifts",
]
