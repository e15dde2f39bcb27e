"""Frieze value types: subset families and rendered row tables."""

from dataclasses import dataclass


@dataclass(frozen=True)
class SubsetFamily:
    """Pair-excluding subsets of {1, ..., n}, as bitmasks.

    Bit k-1 of a mask is set when index k is kept.

    Attributes:
        ground_size: n
        masks: Distinct kept-index masks
        cyclic: Whether the pair (n, 1) may be removed
    """

    ground_size: int
    masks: tuple[int, ...]
    cyclic: bool = False

    def __len__(self) -> int:
        return len(self.masks)

    def exclusions(self, mask: int) -> int:
        """Number of removed pairs for ``mask``."""
        return (self.ground_size - mask.bit_count()) // 2


@dataclass(frozen=True)
class FriezeTable:
    """First rows of a frieze, one period wide.

    Attributes:
        quiddity: Entries of the quiddity row
        rows: rows[k-1] is non-trivial row k (row 1 is the quiddity row)
    """

    quiddity: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"quiddity": list(self.quiddity), "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        """Aligned text with the rows of 0's and 1's on top.

        Successive rows are shifted by half a cell, as in the usual picture.
        """
        n = len(self.quiddity)
        all_rows = [(-1, (0,) * n), (0, (1,) * n)] + [
            (k, row) for k, row in enumerate(self.rows, start=1)
        ]
        width = max(len(str(v)) for _, row in all_rows for v in row) + 2
        lines = []
        for k, row in all_rows:
            indent = " " * (width // 2) if k % 2 == 0 else ""
            lines.append((indent + "".join(str(v).rjust(width) for v in row)).rstrip())
        return "\n".join(lines)
