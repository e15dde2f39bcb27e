"""Memoized frieze entries a_{i,j}.

Indices are 1-based: a_i = q[(i - 1) mod n]. a_{i,j} is the continuant of
a_i, ..., a_j, with a_{i,i-1} = 1 and a_{i,i-2} = 0. Entries are stored per
diagonal i (reduced modulo n) and extended on demand with
a_{i,j} = a_j * a_{i,j-1} - a_{i,j-2}.
"""

import threading
from functools import lru_cache

import structlog

from src.models import IndexOutOfRangeError, QuidditySequence

logger = structlog.get_logger()


class FriezeGrid:
    """Lazily extended table of frieze entries for one quiddity sequence.

    Safe to share between threads: diagonal extension happens under a lock.
    """

    def __init__(self, quiddity: QuidditySequence):
        self.quiddity = quiddity
        self.n = len(quiddity)
        # _diagonals[r][L + 1] = a_{r+1, r+L} for L >= -1
        self._diagonals: list[list[int]] = [[0, 1] for _ in range(self.n)]
        self._lock = threading.Lock()

    def a(self, i: int) -> int:
        """Quiddity entry a_i."""
        return self.quiddity.cyclic(i - 1)

    def entry(self, i: int, j: int) -> int:
        """a_{i,j} for j >= i - 2.

        Raises:
            IndexOutOfRangeError: If j < i - 2
        """
        length = j - i + 1
        if length < -1:
            raise IndexOutOfRangeError(f"a_{{{i},{j}}} lies above the row of 0's")
        r = (i - 1) % self.n
        diagonal = self._diagonals[r]
        if length + 1 >= len(diagonal):
            with self._lock:
                while len(diagonal) <= length + 1:
                    k = len(diagonal) - 1  # next window length
                    diagonal.append(self.a(i + k - 1) * diagonal[-1] - diagonal[-2])
        return diagonal[length + 1]

    def window(self, i: int, length: int) -> tuple[int, ...]:
        """Quiddity entries a_i, ..., a_{i+length-1}."""
        return tuple(self.a(i + k) for k in range(length))

    def diamond_holds(self, i: int, j: int) -> bool:
        """a_{i,j-1} a_{i+1,j} - a_{i,j} a_{i+1,j-1} == 1, for j >= i."""
        return (
            self.entry(i, j - 1) * self.entry(i + 1, j)
            - self.entry(i, j) * self.entry(i + 1, j - 1)
        ) == 1

    def row(self, k: int) -> tuple[int, ...]:
        """Row k (row 1 is the quiddity row), one period wide.

        Column c shows a_{s, s+k-1} with s = c + 1 - floor((k - 1) / 2), so
        consecutive rows interleave the way friezes are drawn.
        """
        shift = (k - 1) // 2
        return tuple(self.entry(c + 1 - shift, c - shift + k) for c in range(self.n))


@lru_cache(maxsize=256)
def grid_for(q: QuidditySequence) -> FriezeGrid:
    """Shared grid per quiddity sequence."""
    logger.debug("frieze_grid_created", quiddity=str(q))
    return FriezeGrid(q)


def entry(q: QuidditySequence, i: int, j: int) -> int:
    return grid_for(q).entry(i, j)
