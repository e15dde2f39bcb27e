"""Property suites behind `frieze verify`.

Each suite takes a seeded random generator, a sample budget and the loaded
configuration, and records every individual check in a Tally.
"""

import random
from collections.abc import Callable
from functools import lru_cache

from src.config import FriezeConfig
from src.frieze import (
    continuant,
    cyclic_pair_excluding_subsets,
    entry,
    entry_determinant,
    entry_pair_excluding,
    grid_for,
    pair_excluding_subsets,
)
from src.growth import (
    growth_closed_form,
    growth_coefficient_formula,
    growth_coefficient_rows,
    realizable_pair,
    recursion_sequence,
)
from src.models import (
    Boundary,
    EarInsertion,
    EarScript,
    FriezeError,
    FriezeType,
    NonOrientedCycle,
    NotSkeletalError,
    QuiddityPair,
    QuidditySequence,
)
from src.quiddity import (
    canonical_rotation,
    classify,
    cyclically_equal,
    enumerate_skeletal,
    is_skeletal,
    is_trivial,
    legal_reductions,
    partner,
    reduce_once,
    reduce_to_skeletal,
    reverse_reduce,
)
from src.quiver import canonicalize, enumerate_cycles, mu, sigma, sigma_tilde
from src.triangulation import (
    attach_ear,
    corner_counts,
    quiddity_pair,
    quiver_of,
    skeleton_of,
    triangulation_from_quiddity,
)
from src.tube import check_ar, check_growth, check_repth

MAX_REPORTED_FAILURES = 20
MAX_EAR_VERTICES = 10
MAX_EAR_DEPTH = 3
MAX_TUBE_RANK = 8


class Tally:
    """Counts checks and keeps the first few failure descriptions."""

    def __init__(self):
        self.cases = 0
        self.failures: list[str] = []

    def check(self, ok: bool, description: str) -> None:
        self.cases += 1
        if not ok and len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(description)

    def record(self, cases: int, failures: list[str]) -> None:
        """Fold in a batch checked elsewhere."""
        self.cases += cases
        room = MAX_REPORTED_FAILURES - len(self.failures)
        self.failures.extend(failures[: max(room, 0)])


def random_quiddity(rng: random.Random, max_length: int, max_entry: int) -> QuidditySequence:
    length = rng.randint(1, max_length)
    return QuidditySequence(tuple(rng.randint(1, max_entry) for _ in range(length)))


def random_infinite(rng: random.Random, max_length: int, max_entry: int) -> QuidditySequence:
    while True:
        q = random_quiddity(rng, max_length, max_entry)
        if classify(q) is FriezeType.INFINITE:
            return q


def random_skeletal(rng: random.Random, max_length: int, max_entry: int) -> QuidditySequence:
    while True:
        length = rng.randint(1, max_length)
        q = QuidditySequence(tuple(rng.randint(2, max_entry) for _ in range(length)))
        if not is_trivial(q):
            return q


@lru_cache(maxsize=1 << 14)
def reduction_endpoints(q: QuidditySequence) -> frozenset[QuidditySequence]:
    """Canonical end points of every maximal sequence of reductions from q."""
    legal = legal_reductions(q)
    if not legal:
        return frozenset({canonical_rotation(q)})
    ends: set[QuidditySequence] = set()
    for index in legal:
        ends |= reduction_endpoints(reduce_once(q, index))
    return frozenset(ends)


def _all_sequences(max_length: int, max_entry: int):
    def extend(prefix: tuple[int, ...]):
        if prefix:
            yield QuidditySequence(prefix)
        if len(prefix) < max_length:
            for a in range(1, max_entry + 1):
                yield from extend(prefix + (a,))

    yield from extend(())


def suite_reduction(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    candidates = list(_all_sequences(5, 5))
    candidates += [random_quiddity(rng, 10, 6) for _ in range(min(samples, 300))]
    for q in candidates:
        if classify(q) is not FriezeType.INFINITE:
            continue
        ends = reduction_endpoints(q)
        tally.check(len(ends) == 1, f"({q}) reduces to {len(ends)} different results")
        skeletal = reduce_to_skeletal(q)
        tally.check(
            is_skeletal(skeletal) or is_trivial(skeletal),
            f"({q}) reduces to non-skeletal ({skeletal})",
        )

    for _ in range(min(samples, 500)):
        q = random_quiddity(rng, 8, 6)
        gap = rng.randrange(len(q))
        grown = reverse_reduce(q, gap)
        index = 0 if len(q) == 1 else gap
        tally.check(
            cyclically_equal(reduce_once(grown, index), q),
            f"reverse_reduce({q}, {gap}) does not reduce back",
        )

    for _ in range(min(samples, 500)):
        q = random_skeletal(rng, 10, 7)
        p = partner(q)
        tally.check(cyclically_equal(partner(p), q), f"partner is not an involution on ({q})")
        tally.check(
            growth_coefficient_rows(q) == growth_coefficient_rows(p),
            f"partner changes the growth coefficient of ({q})",
        )
    return tally


def suite_frieze(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for _ in range(min(max(samples // 200, 20), 50)):
        q = random_infinite(rng, 8, 6)
        n = len(q)
        grid = grid_for(q)
        for i in range(1, n + 1):
            for length in range(1, 2 * n + 3):
                j = i + length - 1
                value = grid.entry(i, j)
                by_subsets = (
                    entry_pair_excluding(q, i, j, config.subset_window_limit)
                    if length <= config.subset_window_limit
                    else value
                )
                tally.check(
                    value == entry_determinant(q, i, j) == by_subsets
                    == continuant(grid.window(i, length)),
                    f"({q}) a_{{{i},{j}}} differs between methods",
                )
                tally.check(grid.diamond_holds(i, j), f"({q}) diamond fails at ({i},{j})")
                tally.check(value > 0, f"({q}) a_{{{i},{j}}} = {value} is not positive")
                tally.check(entry(q, i + n, j + n) == value, f"({q}) not periodic at ({i},{j})")

    linear = [len(pair_excluding_subsets(n)) for n in range(0, 13)]
    for n in range(2, 13):
        cyclic = len(cyclic_pair_excluding_subsets(n))
        expected = linear[n] + linear[n - 2] - (1 if n % 2 == 0 else 0)
        tally.check(cyclic == expected, f"cyclic subset count wrong for n={n}")
    return tally


def suite_growth(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for _ in range(samples):
        q = random_infinite(rng, config.verify_max_length, config.verify_max_entry)
        rows_value = growth_coefficient_rows(q)
        if len(q) <= config.subset_window_limit:
            tally.check(
                rows_value == growth_coefficient_formula(q, config.subset_window_limit),
                f"({q}) rows and formula disagree",
            )
        tally.check(
            rows_value == growth_coefficient_rows(q.reversed()),
            f"({q}) growth changes under reflection",
        )
        skeletal = reduce_to_skeletal(q)
        tally.check(
            rows_value == growth_coefficient_rows(skeletal),
            f"({q}) growth changes under reduction",
        )
        if is_skeletal(skeletal):
            tally.check(rows_value > 2, f"({q}) skeletal growth not above 2")

    for _ in range(min(samples, 200)):
        s1 = rng.randint(2, 10**6)
        expected = recursion_sequence(s1, 12)
        for r in range(1, 13):
            tally.check(
                growth_closed_form(s1, r) == expected[r - 1],
                f"closed form differs for s1={s1}, r={r}",
            )
    return tally


def suite_quiver(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for n in range(2, config.verify_max_length + 1):
        cycles = enumerate_cycles(n)
        for Q in cycles:
            s, st = sigma(Q), sigma_tilde(Q)
            tally.check(canonicalize(mu(s)) == canonicalize(Q), f"mu(sigma({Q})) != {Q}")
            tally.check(s.total() + st.total() == 3 * n, f"{Q}: arrow-count identity fails")
            tally.check(cyclically_equal(partner(s), st), f"{Q}: partner(sigma) != sigma_tilde")
            roles = Q.vertex_roles()
            tally.check(len(roles) == n, f"{Q}: vertex roles incomplete")
        skeletal = enumerate_skeletal(n)
        tally.check(len(skeletal) == len(cycles), f"n={n}: bijection counts differ")
        for q in skeletal:
            tally.check(cyclically_equal(sigma(mu(q)), q), f"sigma(mu({q})) != ({q})")
    return tally


def suite_triangulation(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for vertices in range(1, config.verify_max_length + 1):
        for q in enumerate_skeletal(vertices):
            T = triangulation_from_quiddity(q)
            outer, inner = quiddity_pair(T)
            tally.check(outer == q, f"({q}) outer quiddity is ({outer})")
            tally.check(cyclically_equal(inner, partner(q)), f"({q}) inner quiddity is ({inner})")
            tally.check(corner_counts(T) == (outer, inner), f"({q}) corner count mismatch")
            tally.check(
                canonicalize(quiver_of(T)) == canonicalize(mu(q)),
                f"({q}) quiver of triangulation differs from mu",
            )
            tally.check(T.arc_count == len(quiver_of(T)), f"({q}) arc count mismatch")
    return tally


def ear_scripts(pair: QuiddityPair, depth: int):
    """Every script of at most ``depth`` ears, with the pair it produces.

    Gaps range over the current length of the boundary receiving the ear.
    """
    yield (), pair
    if depth == 0:
        return
    for boundary in (Boundary.B1, Boundary.B2):
        for gap in range(len(pair.on(boundary))):
            step = EarInsertion(boundary, gap)
            for rest, end in ear_scripts(attach_ear(pair, boundary, gap), depth - 1):
                yield (step,) + rest, end


def suite_ears(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for vertices in range(1, min(MAX_EAR_VERTICES, config.verify_max_length) + 1):
        for q in enumerate_skeletal(vertices):
            base = QuiddityPair(q, partner(q))
            for steps, decorated in ear_scripts(base, MAX_EAR_DEPTH):
                tally.check(
                    EarScript(steps).replay(base) == decorated,
                    f"replaying ears {steps} on ({q}) differs",
                )
                skeleton = skeleton_of(decorated)
                tally.check(
                    cyclically_equal(skeleton.outer, base.outer)
                    and cyclically_equal(skeleton.inner, base.inner),
                    f"ears {steps} on ({q}) do not reduce back",
                )
    return tally


def suite_tube(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for _ in range(min(max(samples // 250, 10), 40)):
        q = random_skeletal(rng, MAX_TUBE_RANK, 6)
        n = len(q)
        for report in (check_repth(q, 2 * n), check_growth(q), check_ar(q, 2 * n)):
            tally.record(
                report.cases, [f"{report.check} fails on ({q}) at {m}" for m in report.failures]
            )
    return tally


def suite_negatives(rng: random.Random, samples: int, config: FriezeConfig) -> Tally:
    tally = Tally()
    for entries, expected in (
        ((1, 1), FriezeType.INVALID),
        ((1, 2), FriezeType.INVALID),
        ((1,), FriezeType.INVALID),
        ((1, 1, 1), FriezeType.FINITE),
        ((1, 2, 1, 2), FriezeType.FINITE),
        ((2, 3, 3), FriezeType.INFINITE),
    ):
        got = classify(QuidditySequence(entries))
        tally.check(got is expected, f"{entries} classified {got.value}")

    for trivial in ((2,), (2, 2), (2, 2, 2, 2)):
        q = QuidditySequence(trivial)
        for operation in (partner, triangulation_from_quiddity, mu):
            try:
                operation(q)
                tally.check(False, f"{operation.__name__} accepted {trivial}")
            except NotSkeletalError:
                tally.check(True, "")

    for first, second in (((2, 3), (2, 3)), ((4, 3, 4, 3), (5, 20))):
        q1, q2 = QuidditySequence(first), QuidditySequence(second)
        tally.check(
            growth_coefficient_formula(q1) == growth_coefficient_formula(q2),
            f"{first} and {second} should share a growth coefficient",
        )
        tally.check(not realizable_pair(q1, q2), f"{first} and {second} reported realizable")

    try:
        NonOrientedCycle.parse("IIII")
        tally.check(False, "oriented word accepted")
    except FriezeError:
        tally.check(True, "")
    return tally


SUITES: dict[str, Callable[[random.Random, int, FriezeConfig], Tally]] = {
    "reduction": suite_reduction,
    "frieze": suite_frieze,
    "growth": suite_growth,
    "quiver": suite_quiver,
    "triangulation": suite_triangulation,
    "ears": suite_ears,
    "tube": suite_tube,
    "negatives": suite_negatives,
}
