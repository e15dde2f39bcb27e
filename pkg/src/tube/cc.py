"""Specialized Caldero-Chapoton values on a rank-n tube.

Every value is a frieze entry: s(M_{i,j}) = a_{i,j}. The functions below
evaluate the quotients N/(M_{j_1} + M_{j_1+1} + ...) of the top of a
module by the mouth pairs it excludes, and check the alternating-sum,
growth and Auslander-Reiten identities entry by entry.
"""

import math
from collections.abc import Iterable

import structlog

from src.frieze import DEFAULT_WINDOW_LIMIT, entry
from src.growth import growth_coefficient_formula
from src.models import (
    IdentityReport,
    LevelTooSmallError,
    OverlappingPairsError,
    QuidditySequence,
    RankMismatchError,
    TubeModuleIndex,
)

logger = structlog.get_logger()


def _check_rank(q: QuidditySequence, M: TubeModuleIndex) -> None:
    if M.rank != len(q):
        raise RankMismatchError(f"Tube of rank {M.rank} does not match ({q})")


def cc_value(q: QuidditySequence, M: TubeModuleIndex) -> int:
    """s(M_{i,j}) = a_{i,j}.

    Raises:
        RankMismatchError: If the tube rank is not len(q)
    """
    _check_rank(q, M)
    return entry(q, M.start, M.end)


def middle_terms(M: TubeModuleIndex) -> list[TubeModuleIndex]:
    """Middle terms of the almost split sequence ending at M.

    The mouth has the single middle term M_{i-1,i}; above it there are two.
    """
    terms = [TubeModuleIndex.between(M.rank, M.start - 1, M.end)]
    if M.level >= 2:
        terms.append(TubeModuleIndex.between(M.rank, M.start, M.end - 1))
    return terms


def excluded_configurations(t: int) -> list[tuple[int, ...]]:
    """Sets of pairwise disjoint pairs on a cycle of length t.

    Pair p covers relative positions p and (p + 1) mod t. The two perfect
    matchings of an even cycle are listed separately.
    """
    if t < 2:
        return [()]
    found: list[tuple[int, ...]] = []

    def extend(p: int, chosen: tuple[int, ...], covered: frozenset[int]) -> None:
        if p == t:
            found.append(chosen)
            return
        extend(p + 1, chosen, covered)
        pair = {p, (p + 1) % t}
        if not pair & covered and len(pair) == 2:
            extend(p + 1, chosen + (p,), covered | pair)

    extend(0, (), frozenset())
    return found


def quotient_value(q: QuidditySequence, i: int, t: int, excluded: Iterable[int]) -> int:
    """Product of a_r over the window i..i+t-1 minus the excluded pairs.

    ``excluded`` holds pair starts r (absolute indices); pair r covers r and
    r+1, where the pair starting at i+t-1 wraps to i.

    Raises:
        OverlappingPairsError: If pairs overlap or leave the window
    """
    covered: set[int] = set()
    for r in excluded:
        p = r - i
        if not 0 <= p < t:
            raise OverlappingPairsError(f"Pair at {r} leaves the window {i}..{i + t - 1}")
        pair = {p, (p + 1) % t}
        if len(pair) < 2 or pair & covered:
            raise OverlappingPairsError(f"Pair at {r} overlaps another excluded pair")
        covered |= pair
    return math.prod(q.cyclic(i + p - 1) for p in range(t) if p not in covered)


def repth_rhs(q: QuidditySequence, i: int, t: int) -> int:
    """Alternating sum of quotient values over all excluded-pair sets.

    Raises:
        LevelTooSmallError: If t < 3
    """
    if t < 3:
        raise LevelTooSmallError(f"Level {t} is below 3")
    total = 0
    for config in excluded_configurations(t):
        value = quotient_value(q, i, t, (i + p for p in config))
        total += -value if len(config) % 2 else value
    return total


def verify_ar_diamond(q: QuidditySequence, M: TubeModuleIndex) -> bool:
    """s(tau M) s(M) - s(B) == 1 with B the sum of the middle terms."""
    s_b = math.prod(cc_value(q, term) for term in middle_terms(M))
    return cc_value(q, M.tau()) * cc_value(q, M) - s_b == 1


def check_repth(q: QuidditySequence, max_level: int) -> IdentityReport:
    n = len(q)
    failures, flagged, cases = [], [], 0
    for i in range(1, n + 1):
        for t in range(3, max_level + 1):
            M = TubeModuleIndex(n, i, t)
            difference = cc_value(q, M) - entry(q, i + 1, i + t - 2)
            cases += 1
            if t > n:
                flagged.append(str(M))
            if repth_rhs(q, i, t) != difference:
                failures.append(str(M))
    logger.debug("tube_check_done", check="repth", cases=cases, failures=len(failures))
    return IdentityReport("repth", q.entries, cases, tuple(failures), tuple(flagged))


def check_growth(q: QuidditySequence, window_limit: int = DEFAULT_WINDOW_LIMIT) -> IdentityReport:
    """s(M) - s(M~) = s_q for every M at level n."""
    n = len(q)
    s_q = growth_coefficient_formula(q, window_limit)
    failures = []
    for i in range(1, n + 1):
        M = TubeModuleIndex(n, i, n)
        difference = cc_value(q, M) - entry(q, i + 1, i + n - 2)
        if difference != s_q or (n >= 3 and repth_rhs(q, i, n) != s_q):
            failures.append(str(M))
    return IdentityReport("growth", q.entries, n, tuple(failures))


def check_ar(q: QuidditySequence, max_level: int) -> IdentityReport:
    n = len(q)
    failures, cases = [], 0
    for i in range(1, n + 1):
        for t in range(1, max_level + 1):
            M = TubeModuleIndex(n, i, t)
            cases += 1
            if not verify_ar_diamond(q, M):
                failures.append(str(M))
    return IdentityReport("ar", q.entries, cases, tuple(failures))
