"""Non-oriented cyclic quivers stored as arrow words.

Letter k of the word (1-based) is the arrow between vertices k and k+1,
taken modulo n. An increasing letter means k -> k+1, a decreasing letter
means k <- k+1.
"""

from dataclasses import dataclass
from enum import Enum

from src.models.errors import NotACycleWordError


class Arrow(Enum):
    """Orientation of one arrow of the cycle."""

    INC = "I"
    DEC = "D"


class VertexRole(Enum):
    """Every vertex is exactly one of these."""

    HEAD_OF_INCREASING = "head_of_increasing"
    TAIL_OF_DECREASING = "tail_of_decreasing"


_LETTER_ALIASES = {
    "I": Arrow.INC,
    "INC": Arrow.INC,
    "INCREASING": Arrow.INC,
    "D": Arrow.DEC,
    "DEC": Arrow.DEC,
    "DECREASING": Arrow.DEC,
}


@dataclass(frozen=True)
class NonOrientedCycle:
    """Quiver whose underlying graph is an n-cycle with a source and a sink.

    Attributes:
        word: Arrow letters, word[k] joins vertices k+1 and k+2 (1-based, mod n)
    """

    word: tuple[Arrow, ...]

    def __post_init__(self):
        word = tuple(self.word)
        if len(word) < 2:
            raise NotACycleWordError("A cycle word needs at least two arrows")
        if any(not isinstance(letter, Arrow) for letter in word):
            raise NotACycleWordError(f"Unknown letters in {word!r}")
        if Arrow.INC not in word or Arrow.DEC not in word:
            raise NotACycleWordError(
                "Oriented cycle: the word needs both increasing and decreasing arrows"
            )
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "NonOrientedCycle":
        """Parse 'IIDD' or a comma list such as 'Inc,Inc,Dec,Dec'."""
        cleaned = text.strip().strip("()[]")
        if "," in cleaned or " " in cleaned:
            tokens = [tok.strip() for tok in cleaned.replace(" ", ",").split(",") if tok.strip()]
        else:
            tokens = list(cleaned)
        letters = []
        for token in tokens:
            letter = _LETTER_ALIASES.get(token.upper())
            if letter is None:
                raise NotACycleWordError(f"Unknown arrow letter {token!r} in {text!r}")
            letters.append(letter)
        return cls(tuple(letters))

    @classmethod
    def from_json(cls, data: dict) -> "NonOrientedCycle":
        return cls.parse(data["word"])

    def to_json(self) -> dict:
        return {"word": str(self)}

    def __str__(self) -> str:
        return "".join(letter.value for letter in self.word)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def vertex_count(self) -> int:
        return len(self.word)

    def letter(self, k: int) -> Arrow:
        """Letter k, 1-based and cyclic."""
        return self.word[(k - 1) % len(self.word)]

    def rotate(self, k: int) -> "NonOrientedCycle":
        """Relabel so that vertex k+1 becomes vertex 1."""
        k %= len(self.word)
        return NonOrientedCycle(self.word[k:] + self.word[:k])

    def is_source(self, v: int) -> bool:
        return self.letter(v - 1) is Arrow.DEC and self.letter(v) is Arrow.INC

    def is_sink(self, v: int) -> bool:
        return self.letter(v - 1) is Arrow.INC and self.letter(v) is Arrow.DEC

    def sources(self) -> list[int]:
        return [v for v in range(1, len(self.word) + 1) if self.is_source(v)]

    def sinks(self) -> list[int]:
        return [v for v in range(1, len(self.word) + 1) if self.is_sink(v)]

    def vertex_roles(self) -> dict[int, VertexRole]:
        """Role of each vertex, read off the arrow on its left."""
        roles = {}
        for v in range(1, len(self.word) + 1):
            if self.letter(v - 1) is Arrow.INC:
                roles[v] = VertexRole.HEAD_OF_INCREASING
            else:
                roles[v] = VertexRole.TAIL_OF_DECREASING
        return roles

    def decreasing_count(self) -> int:
        return self.word.count(Arrow.DEC)

    def increasing_count(self) -> int:
        return self.word.count(Arrow.INC)
