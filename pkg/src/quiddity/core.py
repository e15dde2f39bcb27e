"""Quiddity sequences as cyclic words.

Rotation classes, reduction at a 1 and its inverse, skeletal form,
classification, block form and the partner sequence of the other boundary.
All functions are pure and take 0-based positions.
"""

from collections.abc import Sequence
from itertools import product

import structlog

from src.models import (
    BlockForm,
    FriezeType,
    IllegalReductionError,
    NotAOneError,
    NotInfiniteTypeError,
    NotSkeletalError,
    QuidditySequence,
)

logger = structlog.get_logger()


def least_rotation(word: Sequence) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    doubled = list(word) + list(word)
    failure = [-1] * len(doubled)
    k = 0
    for j in range(1, len(doubled)):
        current = doubled[j]
        i = failure[j - k - 1]
        while i != -1 and current != doubled[k + i + 1]:
            if current < doubled[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if current != doubled[k + i + 1]:
            if current < doubled[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k


def canonical_rotation(q: QuidditySequence) -> QuidditySequence:
    return q.rotate(least_rotation(q.entries))


def cyclically_equal(q1: QuidditySequence, q2: QuidditySequence) -> bool:
    """True iff some rotation of q1 equals q2."""
    if len(q1) != len(q2):
        return False
    return canonical_rotation(q1) == canonical_rotation(q2)


def is_trivial(q: QuidditySequence) -> bool:
    return all(a == 2 for a in q)


def is_skeletal(q: QuidditySequence) -> bool:
    return 1 not in q.entries and not is_trivial(q)


def legal_reductions(q: QuidditySequence) -> list[int]:
    """Positions of the 1's at which reduce_once succeeds."""
    n = len(q)
    if n == 2:
        return [i for i in range(2) if q[i] == 1 and q[1 - i] >= 3]
    if n < 3:
        return []
    return [
        i for i in range(n)
        if q[i] == 1 and q.cyclic(i - 1) >= 2 and q.cyclic(i + 1) >= 2
    ]


def reduce_once(q: QuidditySequence, index: int) -> QuidditySequence:
    """Delete the 1 at ``index`` and decrement its neighbours.

    Raises:
        NotAOneError: If the entry at ``index`` is not 1
        IllegalReductionError: If a neighbour is 1, or for (1,k) with k < 3,
            or for length 1
    """
    n = len(q)
    index %= n
    if q[index] != 1:
        raise NotAOneError(f"Entry {index} of ({q}) is {q[index]}, not 1")
    if n == 1:
        raise IllegalReductionError("Cannot reduce a sequence of length 1")
    if n == 2:
        other = q[1 - index]
        if other < 3:
            raise IllegalReductionError(f"({q}) has no legal reduction")
        return QuidditySequence((other - 2,))

    left, right = (index - 1) % n, (index + 1) % n
    if q[left] < 2 or q[right] < 2:
        raise IllegalReductionError(f"Entry {index} of ({q}) has a neighbouring 1")
    entries = list(q.entries)
    entries[left] -= 1
    entries[right] -= 1
    del entries[index]
    return QuidditySequence(tuple(entries))


def reverse_reduce(q: QuidditySequence, gap: int = 0) -> QuidditySequence:
    """Insert a 1 before position ``gap`` and increment its neighbours.

    The new 1 lands at position ``gap % len(q)``; for a sequence (k) of
    length one the result is (1, k+2) with the 1 at position 0.
    """
    n = len(q)
    if n == 1:
        return QuidditySequence((1, q[0] + 2))
    gap %= n
    entries = list(q.entries)
    entries[(gap - 1) % n] += 1
    entries[gap] += 1
    entries.insert(gap, 1)
    return QuidditySequence(tuple(entries))


def _exhaust(q: QuidditySequence) -> tuple[QuidditySequence, list[tuple[int, QuidditySequence]]]:
    trace = []
    current = q
    while True:
        legal = legal_reductions(current)
        if not legal:
            return current, trace
        current = reduce_once(current, legal[0])
        trace.append((legal[0], current))
        logger.debug("reduction_applied", index=legal[0], length=len(current))


def _oracle_rows(q: QuidditySequence, depth: int) -> list[list[int]]:
    """Rows 1..depth, row k holding a_{c+1,c+k} for c = 0..n-1."""
    n = len(q)
    columns = []
    for c in range(n):
        prev2, prev1 = 0, 1
        column = []
        for length in range(1, depth + 1):
            prev2, prev1 = prev1, q.cyclic(c + length - 1) * prev1 - prev2
            column.append(prev1)
        columns.append(column)
    return [[columns[c][k] for c in range(n)] for k in range(depth)]


def classify(q: QuidditySequence) -> FriezeType:
    """Classify by exhaustive reduction, with row generation as the fallback.

    A Conway-Coxeter frieze of width w has period w + 3, so a closing row of
    1's at row k only counts as finite when n == k + 2.
    """
    reduced, _ = _exhaust(q)
    if all(a >= 2 for a in reduced):
        return FriezeType.INFINITE

    n = len(q)
    rows = _oracle_rows(q, 3 * n)
    for k, row in enumerate(rows[:-1], start=1):
        if all(v == 1 for v in row):
            closes = all(v == 0 for v in rows[k])
            if closes and n == k + 2:
                return FriezeType.FINITE
            break
        if any(v <= 0 for v in row):
            break
    logger.debug("classified_invalid", quiddity=str(q))
    return FriezeType.INVALID


def _require_infinite(q: QuidditySequence) -> None:
    if classify(q) is not FriezeType.INFINITE:
        raise NotInfiniteTypeError(f"({q}) is not the quiddity sequence of an infinite frieze")


def reduce_to_skeletal(q: QuidditySequence) -> QuidditySequence:
    """Reduce at the leftmost legal 1 until no 1 is left.

    Raises:
        NotInfiniteTypeError: If q does not classify as InfiniteType
    """
    _require_infinite(q)
    reduced, _ = _exhaust(q)
    return reduced


def reduction_trace(q: QuidditySequence) -> list[tuple[int, QuidditySequence]]:
    """(index reduced, resulting sequence) for each step of reduce_to_skeletal."""
    _require_infinite(q)
    _, trace = _exhaust(q)
    return trace


def block_form(q: QuidditySequence) -> BlockForm:
    """Split q into (head, run of 2's) blocks starting at the first head > 2.

    Raises:
        NotSkeletalError: If q is trivial or contains a 1
    """
    if not is_skeletal(q):
        raise NotSkeletalError(f"({q}) is not skeletal")
    start = next(i for i, a in enumerate(q) if a > 2)
    rotated = q.rotate(start)
    blocks: list[list[int]] = []
    for a in rotated:
        if a > 2:
            blocks.append([a, 0])
        else:
            blocks[-1][1] += 1
    return BlockForm(tuple((head, run) for head, run in blocks))


def partner(q: QuidditySequence) -> QuidditySequence:
    """Quiddity sequence of the inner boundary of the skeletal triangulation.

    Each block (a, k) contributes 2^(a-3) followed by k+3.
    """
    entries: list[int] = []
    for head, run in block_form(q):
        entries.extend([2] * (head - 3))
        entries.append(run + 3)
    return QuidditySequence(tuple(entries))


def enumerate_skeletal(n_vertices: int) -> list[QuidditySequence]:
    """Canonical skeletal sequences with sum of (a - 1) equal to n_vertices.

    These are the sequences whose quiver has n_vertices vertices.
    """
    found = set()
    for cuts in product((False, True), repeat=max(n_vertices - 1, 0)):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        if all(p == 1 for p in parts):
            continue
        found.add(canonical_rotation(QuidditySequence(tuple(p + 1 for p in parts))))
    return sorted(found, key=lambda s: (len(s), s.entries))
