"""Skeletal triangulations of an annulus and ear scripts.

A skeletal triangulation of C_{m,n} uses only bridging arcs, so its arcs
form a cyclic sequence in which consecutive arcs share one endpoint and
bound a triangle with a single boundary segment. The triangle between arc k
and arc k+1 sits on the outer boundary (B1) when the outer endpoint moves,
and on the inner boundary (B2) when the inner endpoint moves.
"""

from dataclasses import dataclass, field
from enum import Enum

from src.models.errors import InvalidTriangulationError
from src.models.quiddity import QuidditySequence


class Boundary(Enum):
    """Boundary components of the annulus."""

    B1 = "B1"  # outer
    B2 = "B2"  # inner


@dataclass(frozen=True)
class SkeletalTriangulation:
    """Triangulation of C_{m,n} with bridging arcs only.

    Attributes:
        outer_count: Number m of marked points on B1
        inner_count: Number n of marked points on B2
        arcs: (outer, inner) endpoints, 1-based, in anti-clockwise order
        turns: turns[k] is the boundary carrying the segment of the triangle
            between arcs[k] and arcs[k+1]
        inner_offset: Rotation applied to the inner labels
    """

    outer_count: int
    inner_count: int
    arcs: tuple[tuple[int, int], ...]
    turns: tuple[Boundary, ...]
    inner_offset: int = 0

    def __post_init__(self):
        m, n = self.outer_count, self.inner_count
        arcs = tuple((int(o), int(i)) for o, i in self.arcs)
        turns = tuple(self.turns)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "turns", turns)
        object.__setattr__(self, "inner_offset", self.inner_offset % max(n, 1))

        if m < 1 or n < 1:
            raise InvalidTriangulationError("Both boundaries need a marked point")
        if len(arcs) != m + n or len(turns) != m + n:
            raise InvalidTriangulationError(
                f"Expected {m + n} arcs and turns, got {len(arcs)} and {len(turns)}"
            )
        if turns.count(Boundary.B1) != m or turns.count(Boundary.B2) != n:
            raise InvalidTriangulationError("Each boundary segment must carry one triangle")
        for o, i in arcs:
            if not (1 <= o <= m and 1 <= i <= n):
                raise InvalidTriangulationError(f"Arc ({o}, {i}) leaves C_{{{m},{n}}}")
        for k, (turn, (o, i)) in enumerate(zip(turns, arcs)):
            expected = _advance((o, i), turn, m, n)
            if arcs[(k + 1) % len(arcs)] != expected:
                raise InvalidTriangulationError(
                    f"Arcs {k + 1} and {k + 2} do not bound a triangle"
                )

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def to_json(self) -> dict:
        return {
            "outer": self.outer_count,
            "inner": self.inner_count,
            "arcs": [list(arc) for arc in self.arcs],
            "inner_offset": self.inner_offset,
            "turns": [turn.value for turn in self.turns],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkeletalTriangulation":
        """Load a triangulation; ``turns`` may be omitted unless m = n = 1."""
        m, n = data["outer"], data["inner"]
        arcs = tuple(tuple(arc) for arc in data["arcs"])
        if "turns" in data:
            turns = tuple(Boundary(t) for t in data["turns"])
        else:
            turns = _turns_from_arcs(arcs, m, n)
        return cls(m, n, arcs, turns, data.get("inner_offset", 0))


def _advance(arc: tuple[int, int], turn: Boundary, m: int, n: int) -> tuple[int, int]:
    o, i = arc
    if turn is Boundary.B1:
        return (o % m + 1, i)
    return (o, i % n + 1)


def _turns_from_arcs(arcs: tuple[tuple[int, int], ...], m: int, n: int) -> tuple[Boundary, ...]:
    turns = []
    for k, (o, i) in enumerate(arcs):
        o2, i2 = arcs[(k + 1) % len(arcs)]
        if o2 != o:
            turns.append(Boundary.B1)
        elif i2 != i:
            turns.append(Boundary.B2)
        elif m == 1 and n > 1:
            turns.append(Boundary.B1)
        elif n == 1 and m > 1:
            turns.append(Boundary.B2)
        else:
            raise InvalidTriangulationError("Arcs of C_{1,1} need explicit turns")
    return tuple(turns)


@dataclass(frozen=True)
class EarInsertion:
    """One ear glued onto a boundary segment.

    Attributes:
        boundary: Boundary receiving the ear
        gap: Position of the new 1 in that boundary's quiddity sequence
    """

    boundary: Boundary
    gap: int


@dataclass(frozen=True)
class QuiddityPair:
    """Quiddity sequences read on B1 and B2."""

    outer: QuidditySequence
    inner: QuidditySequence

    def on(self, boundary: Boundary) -> QuidditySequence:
        return self.outer if boundary is Boundary.B1 else self.inner

    def replace(self, boundary: Boundary, q: QuidditySequence) -> "QuiddityPair":
        if boundary is Boundary.B1:
            return QuiddityPair(q, self.inner)
        return QuiddityPair(self.outer, q)

    def to_json(self) -> dict:
        return {"outer": list(self.outer.entries), "inner": list(self.inner.entries)}


@dataclass(frozen=True)
class EarScript:
    """Ordered ear insertions decorating a skeletal core."""

    steps: tuple[EarInsertion, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def replay(self, pair: QuiddityPair) -> QuiddityPair:
        """Apply every insertion to ``pair`` in order."""
        # Import here to avoid circular dependency
        from src.triangulation.ears import replay

        return replay(self, pair)
