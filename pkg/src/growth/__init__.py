"""Growth coefficients."""

from src.growth.engine import (
    delta,
    growth_closed_form,
    growth_coefficient_formula,
    growth_coefficient_rows,
    growth_report,
    growth_row_constancy,
    growth_sequence,
    minimal_period,
    realizable_pair,
    recursion_sequence,
)

__all__ = [
    "delta",
    "growth_closed_form",
    "growth_coefficient_formula",
    "growth_coefficient_rows",
    "growth_report",
    "growth_row_constancy",
    "growth_sequence",
    "minimal_period",
    "realizable_pair",
    "recursion_sequence",
]
