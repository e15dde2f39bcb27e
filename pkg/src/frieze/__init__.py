"""Frieze entries by recurrence, determinant and subset sums."""

from src.frieze.determinant import (
    bareiss_determinant,
    continuant,
    entry_determinant,
    tridiagonal,
)
from src.frieze.grid import FriezeGrid, entry, grid_for
from src.frieze.rows import rows
from src.frieze.subsets import (
    DEFAULT_WINDOW_LIMIT,
    check_window,
    cyclic_pair_excluding_subsets,
    entry_pair_excluding,
    iter_cyclic_masks,
    iter_linear_masks,
    pair_excluding_subsets,
    signed_subset_sum,
)

__all__ = [
    "bareiss_determinant",
    "continuant",
    "entry_determinant",
    "tridiagonal",
    "FriezeGrid",
    "entry",
    "grid_for",
    "rows",
    "DEFAULT_WINDOW_LIMIT",
    "check_window",
    "cyclic_pair_excluding_subsets",
    "entry_pair_excluding",
    "iter_cyclic_masks",
    "iter_linear_masks",
    "pair_excluding_subsets",
    "signed_subset_sum",
]
