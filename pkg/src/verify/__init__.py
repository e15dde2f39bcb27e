"""Property verification harness."""

from src.verify.runner import run_suites
from src.verify.suites import SUITES

__all__ = ["run_suites", "SUITES"]
