"""
fuzz: randomized verification of every formula and oracle
"""
import logging
from pathlib import Path

from packages.strata.errors import InputError

from ..core.config import settings
from ..documents.codec import emit as emit_document
from ..fuzz.generators import FuzzParams
from ..fuzz.runner import run_fuzz
from ..metrics import fuzz_trials
from .output import emit

logger = logging.getLogger(__name__)


def run(args) -> int:
    params = FuzzParams(
        seed=args.seed if args.seed is not None else settings.FUZZ_SEED,
        trials=args.trials if args.trials is not None else settings.FUZZ_TRIALS,
        max_strata=args.strata if args.strata is not None else settings.FUZZ_MAX_STRATA,
        entry_range=settings.FUZZ_ENTRY_RANGE,
        inject_fault=args.inject_fault,
        int_bits=args.int_bits or settings.INT_BITS,
    )
    if params.trials < 1 or params.max_strata < 1:
        raise InputError("--trials and --strata must be at least 1")
    workers = args.workers if args.workers is not None else settings.FUZZ_WORKERS
    summary = run_fuzz(params, workers=max(1, workers))
    fuzz_trials.inc(summary.trials)

    if args.output and summary.failures:
        first = summary.failures[0].counterexample
        Path(args.output).write_text(emit_document(first), encoding="utf-8")
        logger.info(f"Counterexample for trial {first.trial} written to {args.output}")

    lines = [f"fuzz seed={params.seed} trials={summary.trials} max_strata={params.max_strata}"]
    for name, (passed, failed) in sorted(summary.counts.items()):
        lines.append(f"    {name:<28} {passed:>6} passed {failed:>6} failed")
    if summary.passed:
        lines.append("all checks passed")
    else:
        first = summary.failures[0]
        lines.append(f"{len(summary.failures)} failing trials; first is trial {first.trial}: {', '.join(first.failed)}")
        if first.counterexample is not None:
            lines.append(emit_document(first.counterexample).rstrip("\n"))
    emit(args, summary.to_dict(params), "\n".join(lines))
    return 0 if summary.passed else 1


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("fuzz", parents=parents, help="Run randomized formula checks")
    parser.add_argument("--seed", type=int, help="Base seed (default FUZZ_SEED)")
    parser.add_argument("--trials", type=int, help="Number of trials (default FUZZ_TRIALS)")
    parser.add_argument("--strata", type=int, help="Maximum strata per space (default FUZZ_MAX_STRATA)")
    parser.add_argument("--inject-fault", action="store_true", help="Shift one kernel entry to break consistency")
    parser.add_argument("--workers", type=int, help="Worker processes (default FUZZ_WORKERS)")
    parser.add_argument("--output", metavar="PATH", help="Write the first minimized counterexample here")
    parser.set_defaults(func=run)
