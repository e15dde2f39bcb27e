"""Index calculus for a tube of rank n."""

from dataclasses import dataclass, field

from src.models.errors import FriezeError


@dataclass(frozen=True)
class TubeModuleIndex:
    """Indecomposable M_{i,j} of a rank-n tube.

    The module has quasi-socle at i and level t = j - i + 1. Start indices
    are kept as given (not reduced modulo n) so windows stay contiguous.

    Attributes:
        rank: Rank n of the tube
        start: Index i
        level: Level t >= 1 (1 is the mouth)
    """

    rank: int
    start: int
    level: int

    def __post_init__(self):
        if self.rank < 1:
            raise FriezeError(f"Tube rank must be positive, got {self.rank}")
        if self.level < 1:
            raise FriezeError(f"Tube level must be positive, got {self.level}")

    @classmethod
    def between(cls, rank: int, i: int, j: int) -> "TubeModuleIndex":
        return cls(rank, i, j - i + 1)

    @property
    def end(self) -> int:
        return self.start + self.level - 1

    @property
    def is_mouth(self) -> bool:
        return self.level == 1

    def tau(self) -> "TubeModuleIndex":
        """Auslander-Reiten translate: (i, j) -> (i-1, j-1)."""
        return TubeModuleIndex(self.rank, self.start - 1, self.level)

    def wing(self) -> list["TubeModuleIndex"]:
        """All M_{u,v} with start <= u <= v <= end."""
        return [
            TubeModuleIndex.between(self.rank, u, v)
            for u in range(self.start, self.end + 1)
            for v in range(u, self.end + 1)
        ]

    def canonical(self) -> "TubeModuleIndex":
        """Same module with start reduced to 1..rank."""
        return TubeModuleIndex(self.rank, (self.start - 1) % self.rank + 1, self.level)

    def __str__(self) -> str:
        return f"M({self.start},{self.end})"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one tube identity over a range of modules.

    Attributes:
        check: Identity name (repth, growth or ar)
        quiddity: Entries of the quiddity sequence
        cases: Number of modules checked
        failures: Modules where the identity failed
        flagged: Modules above level n, where the identity is read numerically
    """

    check: str
    quiddity: tuple[int, ...]
    cases: int
    failures: tuple[str, ...] = field(default_factory=tuple)
    flagged: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "quiddity": list(self.quiddity),
            "cases": self.cases,
            "passed": self.passed,
            "failures": list(self.failures),
            "flagged": len(self.flagged),
        }
