"""Skeletal triangulations of C_{m,n} built from a quiddity sequence.

Walking anti-clockwise from the arc (1, 1), outer marked point v is left
after a_v - 2 inner steps followed by one outer step. The walk visits every
arc once and each step cuts off one triangle, so the step word is also the
arrow word of the quiver (inner step = increasing, outer step = decreasing).
"""

from collections import Counter

import structlog

from src.models import (
    Arrow,
    Boundary,
    NonOrientedCycle,
    NotSkeletalError,
    QuidditySequence,
    SkeletalTriangulation,
)
from src.quiddity import is_skeletal

logger = structlog.get_logger()

Point = tuple[Boundary, int]


def step_word(q: QuidditySequence) -> tuple[Boundary, ...]:
    turns: list[Boundary] = []
    for a in q:
        turns.extend([Boundary.B2] * (a - 2))
        turns.append(Boundary.B1)
    return tuple(turns)


def triangulation_from_quiddity(
    q: QuidditySequence, inner_offset: int = 0
) -> SkeletalTriangulation:
    """The skeletal triangulation with outer quiddity q.

    ``inner_offset`` picks the first arc (1, 1 + inner_offset); offset 0 is
    the canonical labeling.

    Raises:
        NotSkeletalError: If q is trivial or contains a 1
    """
    if not is_skeletal(q):
        raise NotSkeletalError(f"({q}) is not skeletal")
    turns = step_word(q)
    m = len(q)
    n = turns.count(Boundary.B2)
    o, i = 1, inner_offset % n + 1
    arcs = []
    for turn in turns:
        arcs.append((o, i))
        if turn is Boundary.B1:
            o = o % m + 1
        else:
            i = i % n + 1
    logger.debug("triangulation_built", outer=m, inner=n, offset=inner_offset)
    return SkeletalTriangulation(m, n, tuple(arcs), turns, inner_offset)


def with_inner_offset(T: SkeletalTriangulation, k: int) -> SkeletalTriangulation:
    """Rotate the inner labels by k."""
    n = T.inner_count
    arcs = tuple((o, (i - 1 + k) % n + 1) for o, i in T.arcs)
    return SkeletalTriangulation(T.outer_count, n, arcs, T.turns, T.inner_offset + k)


def first_arc_choices(q: QuidditySequence) -> list[SkeletalTriangulation]:
    """All triangulations obtained by varying the first bridging arc."""
    base = triangulation_from_quiddity(q)
    return [with_inner_offset(base, k) for k in range(base.inner_count)]


def degrees(T: SkeletalTriangulation) -> tuple[list[int], list[int]]:
    outer = [0] * T.outer_count
    inner = [0] * T.inner_count
    for o, i in T.arcs:
        outer[o - 1] += 1
        inner[i - 1] += 1
    return outer, inner


def quiddity_pair(T: SkeletalTriangulation) -> tuple[QuidditySequence, QuidditySequence]:
    """Triangles at each marked point of B1 and B2, as degree + 1."""
    outer, inner = degrees(T)
    return (
        QuidditySequence(tuple(d + 1 for d in outer)),
        QuidditySequence(tuple(d + 1 for d in inner)),
    )


def triangles(T: SkeletalTriangulation) -> list[tuple[Point, Point, Point]]:
    """Corners of each triangle, in step order."""
    m, n = T.outer_count, T.inner_count
    found = []
    for (o, i), turn in zip(T.arcs, T.turns):
        if turn is Boundary.B1:
            found.append(((Boundary.B1, o), (Boundary.B1, o % m + 1), (Boundary.B2, i)))
        else:
            found.append(((Boundary.B1, o), (Boundary.B2, i), (Boundary.B2, i % n + 1)))
    return found


def corner_counts(T: SkeletalTriangulation) -> tuple[QuidditySequence, QuidditySequence]:
    """Quiddity pair by counting triangle corners, with multiplicity."""
    counts = Counter(corner for triangle in triangles(T) for corner in triangle)
    return (
        QuidditySequence(tuple(counts[(Boundary.B1, o)] for o in range(1, T.outer_count + 1))),
        QuidditySequence(tuple(counts[(Boundary.B2, i)] for i in range(1, T.inner_count + 1))),
    )


def quiver_of(T: SkeletalTriangulation) -> NonOrientedCycle:
    """Q_T with vertex k for arc k; inner triangles give increasing arrows."""
    return NonOrientedCycle(
        tuple(Arrow.INC if turn is Boundary.B2 else Arrow.DEC for turn in T.turns)
    )
