"""
Random instances for the fuzz harness.

Every draw comes from numpy's default_rng seeded with [seed, trial], so an
instance depends only on those two numbers and the parameters.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from packages.strata.ic import LinkSystem, build_link_system
from packages.strata.poset import StratPoset, build_poset
from packages.strata.pushforward import ProperMapKernel, build_kernel

from ..documents.loader import LoadedInput

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


@dataclass(frozen=True)
class FuzzParams:
    seed: int = 0
    trials: int = 100
    max_strata: int = 8
    entry_range: int = 9
    inject_fault: bool = False
    int_bits: int = 64


@dataclass(frozen=True)
class Fault:
    """One kernel entry k(target, source) shifted by delta, validation waived"""
    target: str
    source: str
    delta: int = 1


@dataclass(frozen=True)
class Instance:
    target: StratPoset
    target_links: LinkSystem
    source: StratPoset
    source_links: LinkSystem
    entries: Dict[Pair, int]
    alpha: Dict[str, int]
    alpha_target: Dict[str, int]
    fault: Optional[Fault] = None
    trial: int = 0

    def kernel(self) -> ProperMapKernel:
        entries = dict(self.entries)
        if self.fault is not None:
            pair = (self.fault.target, self.fault.source)
            entries[pair] = entries.get(pair, 0) + self.fault.delta
        return build_kernel(self.source, self.target, entries, validate=self.fault is None)

    def as_input(self) -> LoadedInput:
        return LoadedInput(
            kind="map",
            name=f"trial-{self.trial}",
            kernel=self.kernel(),
            target_links=self.target_links,
            source_links=self.source_links,
        )


def _draw(rng: np.random.Generator, bound: int) -> int:
    return int(rng.integers(-bound, bound + 1))


def random_shape(rng: np.random.Generator, prefix: str, count: int) -> Tuple[List[str], Dict[str, int], List[Pair]]:
    """
    Ids, dimensions and closure pairs for count strata. The last stratum is
    dense: one dimension above the rest and above every other stratum.
    """
    ids = [f"{prefix}{i}" for i in range(count)]
    dims = {s: int(rng.integers(0, count)) for s in ids[:-1]}
    dims[ids[-1]] = max(dims.values()) + 1 if dims else int(rng.integers(0, 3))
    pairs: List[Pair] = []
    for lower in ids[:-1]:
        for upper in ids[:-1]:
            if dims[lower] < dims[upper] and rng.random() < 0.5:
                pairs.append((lower, upper))
        pairs.append((lower, ids[-1]))
    return ids, dims, pairs


def random_links(rng: np.random.Generator, space: StratPoset, bound: int) -> LinkSystem:
    """A complete link system; about a third of the pairs are given as Betti lists"""
    cone: Dict[Pair, int] = {}
    betti: Dict[Pair, List[int]] = {}
    for lower, upper in space.comparable_pairs():
        if rng.random() < 0.3:
            codim = space.complex_dim[upper] - space.complex_dim[lower]
            betti[(lower, upper)] = [int(b) for b in rng.integers(0, bound + 1, size=2 * codim)]
        else:
            cone[(lower, upper)] = _draw(rng, bound)
    return build_link_system(space, cone, betti)


def generate_instance(params: FuzzParams, trial: int) -> Instance:
    rng = np.random.default_rng([params.seed, trial])
    bound = params.entry_range

    target_count = int(rng.integers(1, params.max_strata + 1))
    ids, dims, pairs = random_shape(rng, "y", target_count)
    target = build_poset([(s, dims[s], _draw(rng, bound)) for s in ids], pairs, name=f"target-{trial}")
    target_links = random_links(rng, target, bound)

    source_count = int(rng.integers(1, params.max_strata + 1))
    source_ids, source_dims, source_pairs = random_shape(rng, "x", source_count)
    entries: Dict[Pair, int] = {}
    for v in target.strata:
        for u in source_ids:
            value = _draw(rng, bound)
            if value:
                entries[(v, u)] = value
    source_chi = {
        u: sum(target.chi_c[v] * entries.get((v, u), 0) for v in target.strata) for u in source_ids
    }
    source = build_poset(
        [(u, source_dims[u], source_chi[u]) for u in source_ids], source_pairs, name=f"source-{trial}",
    )
    source_links = random_links(rng, source, bound)

    alpha = {u: _draw(rng, bound) for u in source.strata}
    alpha_target = {v: _draw(rng, bound) for v in target.strata}

    fault = None
    if params.inject_fault:
        sites = [(v, u) for v in target.strata if target.chi_c[v] for u in source.strata]
        if sites:
            v, u = sites[int(rng.integers(0, len(sites)))]
            fault = Fault(target=v, source=u, delta=1)
        else:
            logger.debug(f"Trial {trial}: every target stratum has chi_c 0, no fault site")

    return Instance(
        target=target,
        target_links=target_links,
        source=source,
        source_links=source_links,
        entries=entries,
        alpha=alpha,
        alpha_target=alpha_target,
        fault=fault,
        trial=trial,
    )
