"""
stratchi - Euler characteristic calculus for stratified varieties
Command line entry point
"""
import argparse
import logging
import sys
import time
from typing import List, Optional

from packages.strata.arith import set_int_bits
from packages.strata.errors import InputError

from .commands import bases, catalog, decompose, fuzz, push, validate, verify
from .core.config import settings
from .metrics import command_latency, input_errors, write_metrics

logger = logging.getLogger(__name__)

COMMANDS = (validate, bases, decompose, push, verify, fuzz, catalog)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    common.add_argument(
        "--skip-kernel-validation", action="store_true", help="Accept kernels that fail column consistency",
    )
    common.add_argument("--log-level", help=f"Logging level (default {settings.LOG_LEVEL})")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging; repeat for debug")
    common.add_argument("--metrics-out", metavar="PATH", help="Write Prometheus metrics to PATH")
    common.add_argument("--int-bits", type=int, help=f"Checked integer width (default {settings.INT_BITS})")

    parser = argparse.ArgumentParser(
        prog="stratchi",
        description="Exact Euler characteristic calculus on stratified complex varieties",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers, [common])
    return parser


def configure_logging(args) -> None:
    if args.log_level:
        level = args.log_level.upper()
    elif args.verbose >= 2:
        level = "DEBUG"
    elif args.verbose == 1:
        level = "INFO"
    else:
        level = settings.LOG_LEVEL.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns 0 on success, 1 on a failed check, 2 on invalid input."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)

    started = time.perf_counter()
    try:
        set_int_bits(args.int_bits or settings.INT_BITS)
        code = args.func(args)
    except (InputError, OverflowError, ValueError) as e:
        logger.error(f"{args.command}: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        input_errors.inc()
        code = 2
    finally:
        command_latency.labels(command=args.command).observe((time.perf_counter() - started) * 1000)

    if args.metrics_out and settings.METRICS_ENABLED:
        write_metrics(args.metrics_out)
    return code


if __name__ == "__main__":
    sys.exit(main())
