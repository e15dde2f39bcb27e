"""Verification suite results."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one property suite.

    Attributes:
        name: Suite name
        cases: Number of individual checks run
        failures: Descriptions of failing cases (truncated)
        seconds: Wall time spent in the suite
    """

    name: str
    cases: int
    failures: tuple[str, ...] = field(default_factory=tuple)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": list(self.failures),
        }
