"""Run property suites side by side."""

import random
import time
from concurrent.futures import ThreadPoolExecutor

import structlog

from src.config import FriezeConfig
from src.models import SuiteResult
from src.verify.suites import SUITES

logger = structlog.get_logger()


def _run_one(name: str, seed: int, samples: int, config: FriezeConfig) -> SuiteResult:
    rng = random.Random(f"{seed}:{name}")
    started = time.perf_counter()
    logger.debug("suite_started", suite=name, seed=seed, samples=samples)
    tally = SUITES[name](rng, samples, config)
    elapsed = time.perf_counter() - started
    logger.info("suite_finished", suite=name, cases=tally.cases, failures=len(tally.failures))
    return SuiteResult(name, tally.cases, tuple(tally.failures), elapsed)


def run_suites(
    names: list[str] | None = None,
    seed: int | None = None,
    samples: int | None = None,
    workers: int | None = None,
    config: FriezeConfig | None = None,
) -> list[SuiteResult]:
    """Run the named suites (all by default) and return results in order.

    Raises:
        KeyError: If a name is not a known suite
    """
    config = config or FriezeConfig()
    names = list(SUITES) if not names else names
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise KeyError(f"Unknown suite(s): {', '.join(unknown)}")
    seed = config.default_seed if seed is None else seed
    samples = config.verify_samples if samples is None else samples
    workers = config.verify_workers if workers is None else workers

    with ThreadPoolExecutor(max_workers=max(workers, 1)) as executor:
        futures = [executor.submit(_run_one, name, seed, samples, config) for name in names]
        return [future.result() for future in futures]
