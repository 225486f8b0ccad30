"""Positive braids, skein polynomials and braid index bounds."""

from ._core import (
    Braid,
    CapacityError,
    admissible_writhes,
    alexander,
    cable,
    canonicalize,
    closure_verdict,
    criteria,
    d_n,
    degree_stats,
    homfly,
    homfly_text,
    jones,
    minimality_certificate,
    morton_check,
    mwf_bound,
    positive_genus,
    reduce,
    two_cable,
)

__all__ = [name for name in dir() if not name.startswith("_")]
