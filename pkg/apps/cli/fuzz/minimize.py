"""
Greedy counterexample minimization: drop strata while the failure persists
"""
import logging
from dataclasses import replace
from typing import Dict, Iterable, Optional, Set

from packages.strata.errors import StrataError
from packages.strata.ic import LinkSystem, build_link_system
from packages.strata.poset import StratPoset, build_poset, restrict_poset

from .checks import evaluate_instance
from .generators import Instance

logger = logging.getLogger(__name__)


def _relink(links: LinkSystem, space: StratPoset) -> LinkSystem:
    cone = {p: v for p, v in links.cone.items() if p[0] in space and p[1] in space and p not in links.betti}
    betti = {p: v for p, v in links.betti.items() if p[0] in space and p[1] in space}
    return build_link_system(space, cone, betti)


def _with_chi(space: StratPoset, chi_c: Dict[str, int]) -> StratPoset:
    return build_poset(
        [(s, space.complex_dim[s], chi_c[s]) for s in space.strata],
        space.comparable_pairs(),
        name=space.name,
    )


def drop_target_stratum(instance: Instance, stratum: str) -> Instance:
    """Remove a target stratum; source chi_c is recomputed from the clean kernel."""
    target = restrict_poset(instance.target, [s for s in instance.target.strata if s != stratum])
    entries = {p: v for p, v in instance.entries.items() if p[0] != stratum}
    chi_c = {
        u: sum(target.chi_c[v] * entries.get((v, u), 0) for v in target.strata) for u in instance.source.strata
    }
    source = _with_chi(instance.source, chi_c)
    return replace(
        instance,
        target=target,
        target_links=_relink(instance.target_links, target),
        source=source,
        source_links=_relink(instance.source_links, source),
        entries=entries,
        alpha_target={v: a for v, a in instance.alpha_target.items() if v != stratum},
    )


def drop_source_stratum(instance: Instance, stratum: str) -> Instance:
    source = restrict_poset(instance.source, [s for s in instance.source.strata if s != stratum])
    return replace(
        instance,
        source=source,
        source_links=_relink(instance.source_links, source),
        entries={p: v for p, v in instance.entries.items() if p[1] != stratum},
        alpha={u: a for u, a in instance.alpha.items() if u != stratum},
    )


def _candidates(instance: Instance) -> Iterable[tuple]:
    fault = instance.fault
    for stratum in instance.target.strata:
        if stratum != instance.target.dense and not (fault and stratum == fault.target):
            yield "target", stratum
    for stratum in instance.source.strata:
        if stratum != instance.source.dense and not (fault and stratum == fault.source):
            yield "source", stratum


def _still_fails(instance: Instance, failing: Set[str]) -> bool:
    outcomes = evaluate_instance(instance, only=failing)
    return any(not outcomes.get(name, True) for name in failing)


def minimize(instance: Instance, failing: Set[str]) -> Instance:
    """
    Repeatedly remove a non-dense stratum from either side whenever one of
    the failing checks still fails without it. The fault site is kept.
    """
    current = instance
    while True:
        smaller: Optional[Instance] = None
        for side, stratum in _candidates(current):
            try:
                if side == "target":
                    attempt = drop_target_stratum(current, stratum)
                else:
                    attempt = drop_source_stratum(current, stratum)
            except StrataError as e:
                logger.debug(f"Cannot drop {side} stratum {stratum}: {e}")
                continue
            if _still_fails(attempt, failing):
                smaller = attempt
                break
        if smaller is None:
            break
        current = smaller
    logger.info(
        f"Trial {instance.trial}: minimized to {len(current.target)} target and "
        f"{len(current.source)} source strata"
    )
    return current
