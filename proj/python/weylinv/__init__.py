"""Degree-3 invariant groups Q, Dec, Sdec of split reductive groups."""

from ._weylinv import (
    VerificationError,
    c2,
    dec_at_height,
    factor_group,
    invariants,
    normalize_spec,
)

__all__ = [
    "VerificationError",
    "c2",
    "dec_at_height",
    "factor_group",
    "invariants",
    "normalize_spec",
]
