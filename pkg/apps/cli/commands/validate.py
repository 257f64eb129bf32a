"""
validate: parse a space or map and report every validation step
"""
import logging

from packages.strata.pushforward import column_defects

from ..documents.loader import LoadedInput, load_input
from .output import emit

logger = logging.getLogger(__name__)


def _space_summary(space, links) -> dict:
    return {
        "name": space.name,
        "strata": list(space.strata),
        "dense": space.dense,
        "order": [list(pair) for pair in space.covering_pairs()],
        "links_complete": links.is_complete(),
        "missing_links": [list(pair) for pair in links.missing_pairs()],
    }


def describe(inputs: LoadedInput) -> dict:
    payload = {"kind": inputs.kind, "name": inputs.name, "valid": True}
    if inputs.kind == "space":
        payload["space"] = _space_summary(inputs.target, inputs.target_links)
        return payload
    payload["source"] = _space_summary(inputs.source, inputs.source_links)
    payload["target"] = _space_summary(inputs.target, inputs.target_links)
    payload["kernel"] = {
        "validated": inputs.kernel.validated,
        "defects": [list(d) for d in column_defects(inputs.kernel)],
    }
    return payload


def _space_lines(label: str, summary: dict) -> list:
    links = "complete" if summary["links_complete"] else f"partial ({len(summary['missing_links'])} pairs missing)"
    order = ", ".join(f"{w} < {v}" for w, v in summary["order"]) or "none"
    return [
        f"{label} {summary['name'] or '(unnamed)'}: {len(summary['strata'])} strata, dense {summary['dense']}",
        f"    order: {order}",
        f"    links: {links}",
    ]


def run(args) -> int:
    inputs = load_input(args.path, skip_validation=args.skip_kernel_validation)
    payload = describe(inputs)
    if inputs.kind == "space":
        lines = _space_lines("space", payload["space"])
    else:
        lines = _space_lines("source", payload["source"]) + _space_lines("target", payload["target"])
        defects = payload["kernel"]["defects"]
        if not defects:
            lines.append("kernel: column consistency holds")
        else:
            lines.append(f"kernel: column consistency waived, {len(defects)} inconsistent columns")
    lines.append("valid")
    emit(args, payload, "\n".join(lines))
    return 0


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("validate", parents=parents, help="Validate a space or map document")
    parser.add_argument("path", help="Document path or catalog:<name>")
    parser.set_defaults(func=run)
