"""
Fuzz runner: independent trials, optionally in worker processes, merged
into one summary ordered by trial index
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial, reduce
from typing import Any, Dict, List, Optional, Tuple

from packages.strata.arith import set_int_bits

from ..documents.loader import kernel_to_document
from ..documents.models import Counterexample, KernelEntry
from .checks import evaluate_instance
from .generators import FuzzParams, Instance, generate_instance
from .minimize import minimize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    outcomes: Tuple[Tuple[str, bool], ...]
    counterexample: Optional[Counterexample] = None

    @property
    def failed(self) -> List[str]:
        return [name for name, passed in self.outcomes if not passed]


@dataclass(frozen=True)
class FuzzSummary:
    """Counts per check plus failing trials; merge is associative."""
    trials: int = 0
    counts: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    failures: Tuple[TrialResult, ...] = ()

    @classmethod
    def from_trial(cls, result: TrialResult) -> "FuzzSummary":
        counts = {name: (int(passed), int(not passed)) for name, passed in result.outcomes}
        return cls(trials=1, counts=counts, failures=(result,) if result.failed else ())

    def merge(self, other: "FuzzSummary") -> "FuzzSummary":
        counts = dict(self.counts)
        for name, (passed, failed) in other.counts.items():
            mine = counts.get(name, (0, 0))
            counts[name] = (mine[0] + passed, mine[1] + failed)
        failures = tuple(sorted(self.failures + other.failures, key=lambda r: r.trial))
        return FuzzSummary(trials=self.trials + other.trials, counts=counts, failures=failures)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, params: FuzzParams) -> Dict[str, Any]:
        return {
            "seed": params.seed,
            "trials": self.trials,
            "max_strata": params.max_strata,
            "entry_range": params.entry_range,
            "inject_fault": params.inject_fault,
            "passed": self.passed,
            "checks": {
                name: {"passed": passed, "failed": failed}
                for name, (passed, failed) in sorted(self.counts.items())
            },
            "failed_trials": [r.trial for r in self.failures],
            "counterexamples": [
                r.counterexample.model_dump(mode="json", by_alias=True, exclude_none=True)
                for r in self.failures if r.counterexample is not None
            ],
        }


def counterexample_for(instance: Instance, failed: List[str], seed: int) -> Counterexample:
    fault = instance.fault
    return Counterexample(
        seed=seed,
        trial=instance.trial,
        failed=failed,
        map=kernel_to_document(
            instance.kernel(), instance.source_links, instance.target_links, name=f"counterexample-{instance.trial}",
        ),
        function=dict(instance.alpha),
        target_function=dict(instance.alpha_target),
        fault=KernelEntry(target=fault.target, source=fault.source, chi=fault.delta) if fault else None,
    )


def run_trial(params: FuzzParams, trial: int) -> TrialResult:
    set_int_bits(params.int_bits)
    instance = generate_instance(params, trial)
    outcomes = evaluate_instance(instance)
    failed = [name for name, passed in outcomes.items() if not passed]
    counterexample = None
    if failed:
        logger.warning(f"Trial {trial} failed: {', '.join(failed)}")
        smallest = minimize(instance, {sorted(failed)[0]})
        still = [name for name, passed in evaluate_instance(smallest).items() if not passed]
        counterexample = counterexample_for(smallest, still, params.seed)
    return TrialResult(trial=trial, outcomes=tuple(sorted(outcomes.items())), counterexample=counterexample)


def run_fuzz(params: FuzzParams, workers: int = 1) -> FuzzSummary:
    """
    Run params.trials trials. Results do not depend on workers: each trial
    is seeded by (seed, trial) and the merge orders failures by trial.
    """
    trials = range(params.trials)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(partial(run_trial, params), trials, chunksize=max(1, params.trials // (4 * workers))))
    else:
        results = [run_trial(params, trial) for trial in trials]
    summary = reduce(FuzzSummary.merge, (FuzzSummary.from_trial(r) for r in results), FuzzSummary())
    logger.info(f"Fuzz finished: {summary.trials} trials, {len(summary.failures)} failing")
    return summary
