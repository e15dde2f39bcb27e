"""Quiddity sequence value types.

This module provides the immutable types shared by every other package:
- QuidditySequence: cyclic sequence of positive integers (first non-trivial frieze row)
- BlockForm: the (head, run of 2's) decomposition of a skeletal sequence
- FriezeType: classification outcome
"""

import json
import re
from dataclasses import dataclass
from enum import Enum

from src.models.errors import InvalidQuiddityError


class FriezeType(Enum):
    """Classification of a quiddity sequence.

    Attributes:
        INFINITE: Exhaustive reduction reaches entries all >= 2
        FINITE: Rows close with a row of 1's and a row of 0's (Conway-Coxeter)
        INVALID: Neither; some entry below the quiddity row is non-positive
    """

    INFINITE = "InfiniteType"
    FINITE = "FiniteType"
    INVALID = "Invalid"


_SEPARATORS = re.compile(r"[\s,;]+")


@dataclass(frozen=True)
class QuidditySequence:
    """A cyclic quiddity sequence (a_1, ..., a_n).

    Entries are stored 0-based; ``cyclic(i)`` wraps any integer index modulo n.
    Equality is plain tuple equality; use ``cyclically_equal`` for the cyclic
    class.

    Attributes:
        entries: Positive integers, at least one
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise InvalidQuiddityError("Quiddity sequence must be nonempty")
        for value in entries:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidQuiddityError(f"Entry {value!r} is not an integer")
            if value < 1:
                raise InvalidQuiddityError(f"Entry {value} is not positive")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "QuidditySequence":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "QuidditySequence":
        """Parse '2,3,3', '(2,3,3)' or '2 3 3'.

        Raises:
            InvalidQuiddityError: If a token is not an integer or the result is invalid
        """
        stripped = text.strip().strip("()[]")
        tokens = [tok for tok in _SEPARATORS.split(stripped) if tok]
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError as e:
            raise InvalidQuiddityError(f"Cannot parse quiddity sequence {text!r}") from e
        return cls(values)

    @classmethod
    def from_json(cls, data: dict | str) -> "QuidditySequence":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["entries"]))

    def to_json(self) -> dict:
        return {"entries": list(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def cyclic(self, index: int) -> int:
        """Entry at ``index`` modulo the length (0-based)."""
        return self.entries[index % len(self.entries)]

    def rotate(self, k: int) -> "QuidditySequence":
        """Rotation starting at position k: (a_k, a_{k+1}, ..., a_{k-1})."""
        k %= len(self.entries)
        return QuidditySequence(self.entries[k:] + self.entries[:k])

    def reversed(self) -> "QuidditySequence":
        return QuidditySequence(tuple(reversed(self.entries)))

    def total(self) -> int:
        return sum(self.entries)


@dataclass(frozen=True)
class BlockForm:
    """Skeletal sequence written as (a_{i_1}, 2^(k_1), ..., a_{i_r}, 2^(k_r)).

    Attributes:
        blocks: Pairs (head, run) with head > 2 and run >= 0
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(h), int(k)) for h, k in self.blocks)
        if not blocks:
            raise InvalidQuiddityError("Block form needs at least one block")
        for head, run in blocks:
            if head <= 2 or run < 0:
                raise InvalidQuiddityError(f"Invalid block ({head}, {run})")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def expand(self) -> QuidditySequence:
        """Concatenate the blocks back into a quiddity sequence."""
        entries: list[int] = []
        for head, run in self.blocks:
            entries.append(head)
            entries.extend([2] * run)
        return QuidditySequence(tuple(entries))
