"""Frieze entries as tridiagonal determinants."""

from collections.abc import Sequence

from src.models import IndexOutOfRangeError, QuidditySequence


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[-1][-1]


def tridiagonal(values: Sequence[int]) -> list[list[int]]:
    """Matrix with ``values`` on the diagonal and 1's beside it."""
    size = len(values)
    return [
        [values[r] if r == c else 1 if abs(r - c) == 1 else 0 for c in range(size)]
        for r in range(size)
    ]


def continuant(values: Sequence[int]) -> int:
    """K(x_1, ..., x_k) with K() = 1 and K(x_1) = x_1."""
    prev2, prev1 = 0, 1
    for x in values:
        prev2, prev1 = prev1, x * prev1 - prev2
    return prev1


def entry_determinant(q: QuidditySequence, i: int, j: int) -> int:
    """a_{i,j} as det of the tridiagonal matrix on a_i, ..., a_j.

    Raises:
        IndexOutOfRangeError: If j < i
    """
    if j < i:
        raise IndexOutOfRangeError(f"Determinant window ({i}, {j}) is empty")
    values = [q.cyclic(k - 1) for k in range(i, j + 1)]
    return bareiss_determinant(tridiagonal(values))
