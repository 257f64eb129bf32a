"""
decompose: coefficients of a function in every basis, with a recomposition check
"""
import logging

from packages.strata.functions import (
    as_function,
    decompose_closed,
    decompose_hat,
    decompose_hat_dense,
    decompose_open,
)
from packages.strata.ic import decompose_ic, decompose_ic_basis
from packages.strata.pushforward import pushforward

from ..documents.loader import load_function, load_input
from .output import emit

logger = logging.getLogger(__name__)


def expansions_of(alpha, links):
    """
    Every decomposition the space supports, plus the skipped bases with a reason.
    The dense variants need a dense stratum; the ic variants need complete links.
    """
    space = alpha.space
    missing = links.missing_pairs()
    expansions = [decompose_open(alpha), decompose_closed(alpha), decompose_hat(alpha)]
    skipped = {}
    if space.dense is not None:
        expansions.append(decompose_hat_dense(alpha))
    else:
        skipped["hat-dense"] = "no dense stratum"
    if not missing:
        expansions.append(decompose_ic_basis(links, alpha))
    else:
        skipped["ic"] = f"missing link data for {len(missing)} pairs"
    if space.dense is None:
        skipped["ic-dense"] = "no dense stratum"
    elif missing:
        skipped["ic-dense"] = f"missing link data for {len(missing)} pairs"
    else:
        expansions.append(decompose_ic(links, alpha))
    for basis, reason in skipped.items():
        logger.info(f"Skipping the {basis} basis: {reason}")
    return expansions, skipped


def run(args) -> int:
    inputs = load_input(args.path, skip_validation=args.skip_kernel_validation)
    alpha = load_function(args.function, inputs.source) if args.function else as_function(inputs.source, None)
    if inputs.kind == "map":
        alpha = pushforward(inputs.kernel, alpha)
    expansions, skipped = expansions_of(alpha, inputs.target_links)
    round_trip = all(e.recompose() == alpha for e in expansions)
    payload = {
        "function": alpha.to_dict(),
        "decompositions": {e.basis.value: e.to_dict()["coefficients"] for e in expansions},
        "skipped": skipped,
        "round_trip": round_trip,
    }
    lines = [f"function: {alpha}"]
    for e in expansions:
        coefficients = ", ".join(f"{s}: {c}" for s, c in zip(alpha.space.strata, e.dense_vector()))
        lines.append(f"    {e.basis.value:<10} {coefficients}")
    for basis, reason in skipped.items():
        lines.append(f"    {basis:<10} skipped ({reason})")
    lines.append("round trip: " + ("exact" if round_trip else "MISMATCH"))
    emit(args, payload, "\n".join(lines))
    if not round_trip:
        logger.error("A decomposition did not recompose to its function")
    return 0 if round_trip else 1


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "decompose", parents=parents, help="Decompose a function (pushed to the target for a map) in every basis",
    )
    parser.add_argument("path", help="Space or map document path or catalog:<name>")
    parser.add_argument("--function", metavar="PATH", help="Function document on the source (default 1)")
    parser.set_defaults(func=run)
