"""Growth coefficients of infinite friezes.

s_q = a_{1,n} - a_{2,n-1} for a quiddity sequence of length n. The same
number is the signed sum over cyclic pair-excluding subsets plus the
parity correction delta_n, and the values s_r of the r-fold period follow
s_{r+1} = s_1 s_r - s_{r-1} with s_0 = 2.
"""

import math
from fractions import Fraction

import structlog

from src.frieze import (
    DEFAULT_WINDOW_LIMIT,
    check_window,
    cyclic_pair_excluding_subsets,
    entry,
    signed_subset_sum,
)
from src.models import (
    FriezeType,
    GrowthMethod,
    GrowthReport,
    InconsistentGrowthError,
    NotInfiniteTypeError,
    QuidditySequence,
)
from src.quiddity import classify, cyclically_equal, is_trivial, partner, reduce_to_skeletal

logger = structlog.get_logger()


def _require_infinite(q: QuidditySequence) -> None:
    if classify(q) is not FriezeType.INFINITE:
        raise NotInfiniteTypeError(f"({q}) does not generate an infinite frieze")


def delta(n: int) -> int:
    """0 for odd n, +1 when 4 divides n, -1 otherwise."""
    if n % 2:
        return 0
    return 1 if n % 4 == 0 else -1


def growth_coefficient_rows(q: QuidditySequence) -> int:
    _require_infinite(q)
    n = len(q)
    return entry(q, 1, n) - entry(q, 2, n - 1)


def growth_coefficient_formula(q: QuidditySequence, window_limit: int = DEFAULT_WINDOW_LIMIT) -> int:
    """s_q as the signed cyclic subset sum plus delta_n.

    Raises:
        NotInfiniteTypeError: If q does not generate an infinite frieze
        SubsetLimitError: If len(q) exceeds window_limit
    """
    _require_infinite(q)
    n = len(q)
    check_window(n, window_limit)
    family = cyclic_pair_excluding_subsets(n)
    return signed_subset_sum(q.entries, family.masks) + delta(n)


def minimal_period(q: QuidditySequence) -> int:
    n = len(q)
    for d in range(1, n + 1):
        if n % d == 0 and all(q[i] == q[(i + d) % n] for i in range(n)):
            return d
    return n


def recursion_sequence(s1: int, r: int) -> list[int]:
    """[s_1, ..., s_r] from s_0 = 2."""
    values = [2, s1]
    while len(values) <= r:
        values.append(s1 * values[-1] - values[-2])
    return values[1 : r + 1]


def growth_sequence(q: QuidditySequence, r: int, given_period: bool = False) -> list[int]:
    """s_1, ..., s_r with s_1 taken over the minimal period of q.

    With ``given_period`` the full length counts as the period.
    """
    _require_infinite(q)
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    period = len(q) if given_period else minimal_period(q)
    base = QuidditySequence(q.entries[:period])
    return recursion_sequence(growth_coefficient_rows(base), r)


def growth_closed_form(s1: int, r: int) -> int:
    """s_r as a polynomial in s_1, evaluated with exact rationals."""
    if r == 0:
        return 2
    total = Fraction(s1) ** r
    for l in range(1, r // 2 + 1):
        total += (
            r * Fraction((-1) ** l, r - l) * math.comb(r - l, l) * Fraction(s1) ** (r - 2 * l)
        )
    if total.denominator != 1:
        raise InconsistentGrowthError(f"Closed form for r={r} is not integral: {total}")
    return int(total)


def growth_row_constancy(q: QuidditySequence, r: int = 1) -> bool:
    """Whether a_{i, rn+i-1} - a_{i+1, rn+i-2} is the same s_r for all i."""
    _require_infinite(q)
    n = len(q)
    expected = recursion_sequence(growth_coefficient_rows(q), r)[-1]
    return all(
        entry(q, i, r * n + i - 1) - entry(q, i + 1, r * n + i - 2) == expected
        for i in range(1, n + 1)
    )


def growth_report(
    q: QuidditySequence,
    r: int | None = None,
    method: GrowthMethod | str = GrowthMethod.BOTH,
    given_period: bool = False,
    window_limit: int = DEFAULT_WINDOW_LIMIT,
) -> GrowthReport:
    """Growth data for q.

    With method BOTH and q longer than ``window_limit`` only the rows are
    used, and the report has ``formula_skipped`` set.

    Raises:
        NotInfiniteTypeError: If q does not generate an infinite frieze
        InconsistentGrowthError: If method is BOTH and the two computations differ
        SubsetLimitError: If method is FORMULA and q is longer than window_limit
    """
    method = GrowthMethod(method)
    _require_infinite(q)
    n = len(q)
    period = minimal_period(q)
    formula_skipped = False

    if method is GrowthMethod.ROWS:
        s_q = growth_coefficient_rows(q)
    elif method is GrowthMethod.FORMULA:
        s_q = growth_coefficient_formula(q, window_limit)
    elif n > window_limit:
        s_q = growth_coefficient_rows(q)
        method = GrowthMethod.ROWS
        formula_skipped = True
        logger.info("formula_skipped", length=n, window_limit=window_limit)
    else:
        s_q = growth_coefficient_rows(q)
        by_formula = growth_coefficient_formula(q, window_limit)
        if s_q != by_formula:
            raise InconsistentGrowthError(
                f"({q}): rows give {s_q}, formula gives {by_formula}"
            )

    if r is None:
        r = 1 if given_period else n // period
    sequence = growth_sequence(q, r, given_period=given_period)
    logger.debug("growth_computed", quiddity=str(q), s_q=s_q, period=period)
    return GrowthReport(
        quiddity=q.entries,
        s_q=s_q,
        minimal_period=period,
        s_sequence=tuple(sequence),
        delta_n=delta(n),
        method=method,
        given_period=given_period,
        formula_skipped=formula_skipped,
    )


def realizable_pair(q1: QuidditySequence, q2: QuidditySequence) -> bool:
    """Whether q1 and q2 bound a common annulus triangulation.

    Both must generate infinite friezes whose skeletal reductions are
    non-trivial partners of each other.
    """
    if classify(q1) is not FriezeType.INFINITE or classify(q2) is not FriezeType.INFINITE:
        return False
    s1, s2 = reduce_to_skeletal(q1), reduce_to_skeletal(q2)
    if is_trivial(s1) or is_trivial(s2):
        return False
    return cyclically_equal(partner(s1), s2)
