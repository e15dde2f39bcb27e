"""Growth coefficient report."""

from dataclasses import dataclass, field
from enum import Enum


class GrowthMethod(Enum):
    """How s_q was obtained."""

    ROWS = "rows"
    FORMULA = "formula"
    BOTH = "both"


@dataclass(frozen=True)
class GrowthReport:
    """Growth data of one quiddity sequence.

    Attributes:
        quiddity: Entries of the input sequence
        s_q: Growth coefficient of the sequence at its given length
        minimal_period: Smallest d with the sequence d-periodic
        s_sequence: s_1, ..., s_r computed from s_1 of the chosen period
        delta_n: Parity correction of the closed formula for length n
        method: Method used for s_q
        given_period: True when s_1 refers to the full length instead of d
        formula_skipped: True when the subset sum was too long to run
    """

    quiddity: tuple[int, ...]
    s_q: int
    minimal_period: int
    s_sequence: tuple[int, ...] = field(default_factory=tuple)
    delta_n: int = 0
    method: GrowthMethod = GrowthMethod.ROWS
    given_period: bool = False
    formula_skipped: bool = False

    def to_json(self) -> dict:
        return {
            "quiddity": list(self.quiddity),
            "s_q": self.s_q,
            "minimal_period": self.minimal_period,
            "s_sequence": list(self.s_sequence),
            "delta_n": self.delta_n,
            "method": self.method.value,
            "given_period": self.given_period,
            "formula_skipped": self.formula_skipped,
        }
