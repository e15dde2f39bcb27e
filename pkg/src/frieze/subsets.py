"""Pair-excluding subsets and the subset-sum expansion of frieze entries.

A pair-excluding subset of {1, ..., n} is what is left after removing
disjoint pairs {k, k+1}; the cyclic version may also remove {n, 1}.
Subsets are bitmasks with bit k-1 set when k is kept.
"""

import math
from collections.abc import Iterator, Sequence
from functools import lru_cache

from src.models import IndexOutOfRangeError, QuidditySequence, SubsetFamily, SubsetLimitError

# Longest window a subset sum may run over; the family grows like Fibonacci(n).
DEFAULT_WINDOW_LIMIT = 24


def iter_linear_masks(length: int, offset: int = 0) -> Iterator[int]:
    """Masks of pair-excluding subsets of positions offset..offset+length-1."""
    if length <= 0:
        yield 0
        return
    for rest in iter_linear_masks(length - 1, offset + 1):
        yield (1 << offset) | rest
    if length >= 2:
        yield from iter_linear_masks(length - 2, offset + 2)


def iter_cyclic_masks(n: int) -> Iterator[int]:
    """Distinct cyclic pair-excluding masks; the empty set appears once."""
    seen_empty = False
    for mask in iter_linear_masks(n):
        seen_empty = seen_empty or mask == 0
        yield mask
    if n < 2:
        return
    for mask in iter_linear_masks(n - 2, 1):
        if mask == 0:
            if seen_empty:
                continue
            seen_empty = True
        yield mask


@lru_cache(maxsize=64)
def pair_excluding_subsets(n: int) -> SubsetFamily:
    return SubsetFamily(n, tuple(iter_linear_masks(n)), cyclic=False)


@lru_cache(maxsize=64)
def cyclic_pair_excluding_subsets(n: int) -> SubsetFamily:
    return SubsetFamily(n, tuple(iter_cyclic_masks(n)), cyclic=True)


def signed_subset_sum(values: Sequence[int], masks: Iterator[int] | Sequence[int]) -> int:
    """Sum of (-1)^l * prod(kept values) over the given masks."""
    n = len(values)
    total = 0
    for mask in masks:
        kept = [values[k] for k in range(n) if mask >> k & 1]
        term = math.prod(kept)
        total += -term if (n - len(kept)) // 2 % 2 else term
    return total


def check_window(length: int, window_limit: int = DEFAULT_WINDOW_LIMIT) -> None:
    """Refuse subset sums over more than ``window_limit`` positions.

    Raises:
        SubsetLimitError: If length exceeds window_limit
    """
    if length > window_limit:
        raise SubsetLimitError(
            f"Subset sum over {length} positions exceeds the limit of {window_limit}"
        )


def entry_pair_excluding(
    q: QuidditySequence, i: int, j: int, window_limit: int = DEFAULT_WINDOW_LIMIT
) -> int:
    """a_{i,j} as the signed sum over pair-excluding subsets of i..j.

    Raises:
        IndexOutOfRangeError: If j < i
        SubsetLimitError: If the window is longer than window_limit
    """
    if j < i:
        raise IndexOutOfRangeError(f"Subset window ({i}, {j}) is empty")
    values = [q.cyclic(k - 1) for k in range(i, j + 1)]
    check_window(len(values), window_limit)
    return signed_subset_sum(values, pair_excluding_subsets(len(values)).masks)
