"""Domination polynomials of friendship, book and corona graphs."""

from ._domroots import (
    GraphParseError,
    OracleCapExceeded,
    RootSolveError,
    book_poly,
    book_real_roots,
    classify_point,
    corona_minus2,
    count_real_roots,
    explicit_bound,
    family_poly,
    family_roots,
    friendship_poly,
    friendship_real_roots,
    implicit_radius,
    integer_roots,
    oracle_poly,
    plot_svg,
    roots,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
