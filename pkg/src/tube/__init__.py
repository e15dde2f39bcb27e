"""Tube index calculus and identity checks."""

from src.tube.cc import (
    cc_value,
    check_ar,
    check_growth,
    check_repth,
    excluded_configurations,
    middle_terms,
    quotient_value,
    repth_rhs,
    verify_ar_diamond,
)

__all__ = [
    "cc_value",
    "check_ar",
    "check_growth",
    "check_repth",
    "excluded_configurations",
    "middle_terms",
    "quotient_value",
    "repth_rhs",
    "verify_ar_diamond",
]
