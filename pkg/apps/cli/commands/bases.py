"""
bases: transition matrices among the open, closed, hat and ic bases
"""
import logging

from packages.strata.functions import hat_closed
from packages.strata.ic import hat_ic, ic_transition_matrix
from packages.strata.matrix import TriangularMatrix, invert_unipotent, make_triangular, transition_matrix

from ..documents.loader import load_input
from .output import emit, format_rows

logger = logging.getLogger(__name__)

LINKED = ("ic", "ic-hat")


def _expansion_matrix(space, expansions) -> TriangularMatrix:
    """Column V holds the coefficients of the V-th element"""
    entries = {}
    for upper, coefficients in expansions.items():
        for lower, value in coefficients.items():
            entries[(lower, upper)] = value
    return make_triangular(space, entries)


def transition_matrices(space, links) -> dict:
    """
    closed: closed indicators over open indicators
    hat: hat elements over closed indicators
    ic: ic functions over open indicators
    ic-hat: ic-hat elements over ic functions

    ic and ic-hat need every link value; on a partial link system they are
    replaced by the list of missing pairs.
    """
    matrices = {
        "closed": transition_matrix(space),
        "hat": _expansion_matrix(space, {s: hat_closed(space, s).coefficients for s in space.strata}),
    }
    missing = links.missing_pairs()
    if not missing:
        matrices["ic"] = ic_transition_matrix(links)
        matrices["ic-hat"] = _expansion_matrix(space, {s: hat_ic(links, s).coefficients for s in space.strata})
    else:
        logger.warning(f"Skipping the ic bases: {len(missing)} link pairs missing")
    result = {
        name: {"matrix": matrix.to_rows(), "inverse": invert_unipotent(matrix).to_rows()}
        for name, matrix in matrices.items()
    }
    for name in LINKED:
        if name not in result:
            result[name] = {"missing_links": [list(pair) for pair in missing]}
    return result


def run(args) -> int:
    inputs = load_input(args.path, skip_validation=args.skip_kernel_validation)
    space = inputs.target
    matrices = transition_matrices(space, inputs.target_links)
    lines = [f"order: {' '.join(space.strata)}"]
    for name, pair in matrices.items():
        if "missing_links" in pair:
            shown = ", ".join(f"({w}, {v})" for w, v in pair["missing_links"])
            lines.append(f"{name}: skipped, missing link data for {shown}")
            continue
        lines.append(f"{name}:")
        lines.append(format_rows(pair["matrix"]))
        lines.append(f"{name} inverse:")
        lines.append(format_rows(pair["inverse"]))
    emit(args, {"order": list(space.strata), "matrices": matrices}, "\n".join(lines))
    return 0


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("bases", parents=parents, help="Print basis transition matrices and inverses")
    parser.add_argument("path", help="Space document path or catalog:<name>; for a map, its target")
    parser.set_defaults(func=run)
