"""Row tables of infinite friezes."""

import structlog

from src.frieze.grid import grid_for
from src.models import FriezeTable, FriezeType, NotInfiniteTypeError, QuidditySequence
from src.quiddity import classify

logger = structlog.get_logger()


def rows(q: QuidditySequence, depth: int) -> FriezeTable:
    """First ``depth`` non-trivial rows of the frieze of q.

    Raises:
        NotInfiniteTypeError: If q is not the quiddity sequence of an infinite frieze
        ValueError: If depth < 1
    """
    if depth < 1:
        raise ValueError(f"Depth must be at least 1, got {depth}")
    if classify(q) is not FriezeType.INFINITE:
        raise NotInfiniteTypeError(f"({q}) does not generate an infinite frieze")
    grid = grid_for(q)
    table = FriezeTable(q.entries, tuple(grid.row(k) for k in range(1, depth + 1)))
    logger.debug("rows_generated", quiddity=str(q), depth=depth)
    return table
