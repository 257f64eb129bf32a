"""Finite stratification posets satisfying the frontier condition"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    CycleError,
    DimOrderError,
    DuplicateStratum,
    InputError,
    NoDenseStratum,
    UnknownStratum,
)

logger = logging.getLogger(__name__)

StratumId = str
StratumSpec = Tuple[StratumId, int, int]


@dataclass(frozen=True, eq=False)
class StratPoset:
    """
    A finite set of strata ordered by V <= W iff V lies in the closure of W.

    Strata are kept in the canonical linear extension, sorted by
    (complex_dim, id). Connectivity of each stratum is assumed, not checked.

    Attributes:
        strata: Stratum ids in canonical order
        complex_dim: Complex dimension per stratum
        chi_c: Compactly supported Euler characteristic of each open stratum
        dense: The unique maximum, if there is one
        below: Down-set of each stratum (reflexive)
        above: Up-set of each stratum (reflexive)
        name: Optional label used in logs and documents
    """
    strata: Tuple[StratumId, ...]
    complex_dim: Dict[StratumId, int]
    chi_c: Dict[StratumId, int]
    dense: Optional[StratumId]
    below: Dict[StratumId, FrozenSet[StratumId]]
    above: Dict[StratumId, FrozenSet[StratumId]]
    name: str = ""

    def __contains__(self, stratum: object) -> bool:
        return stratum in self.complex_dim

    def __len__(self) -> int:
        return len(self.strata)

    def __iter__(self):
        return iter(self.strata)

    def _signature(self):
        return (
            self.strata,
            tuple(self.complex_dim[s] for s in self.strata),
            tuple(self.chi_c[s] for s in self.strata),
            tuple(tuple(sorted(self.below[s])) for s in self.strata),
            self.dense,
        )

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, StratPoset):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self) -> int:
        return hash(self._signature())

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<StratPoset{label} strata={list(self.strata)} dense={self.dense!r}>"

    def require(self, stratum: StratumId) -> StratumId:
        if stratum not in self.complex_dim:
            raise UnknownStratum(stratum, self.name or "space")
        return stratum

    def leq(self, lower: StratumId, upper: StratumId) -> bool:
        return lower in self.below[self.require(upper)]

    def lt(self, lower: StratumId, upper: StratumId) -> bool:
        return lower != upper and self.leq(lower, upper)

    def index(self, stratum: StratumId) -> int:
        return self.strata.index(self.require(stratum))

    def strictly_below(self, stratum: StratumId) -> List[StratumId]:
        """Strata W < V in canonical order"""
        down = self.below[self.require(stratum)]
        return [s for s in self.strata if s in down and s != stratum]

    def strictly_above(self, stratum: StratumId) -> List[StratumId]:
        up = self.above[self.require(stratum)]
        return [s for s in self.strata if s in up and s != stratum]

    def comparable_pairs(self) -> List[Tuple[StratumId, StratumId]]:
        """All (W, V) with W < V, ordered by V then W canonically"""
        return [(w, v) for v in self.strata for w in self.strictly_below(v)]

    def covering_pairs(self) -> List[Tuple[StratumId, StratumId]]:
        """Hasse-diagram edges, the minimal input that regenerates the order"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.strata)
        graph.add_edges_from(self.comparable_pairs())
        reduced = nx.transitive_reduction(graph)
        position = {s: i for i, s in enumerate(self.strata)}
        return sorted(reduced.edges(), key=lambda e: (position[e[1]], position[e[0]]))

    def require_dense(self) -> StratumId:
        if self.dense is None:
            raise NoDenseStratum(f"{self.name or 'space'} has no dense stratum (no unique maximum)")
        return self.dense


def _canonical_order(strata: Iterable[StratumId], complex_dim: Dict[StratumId, int]) -> Tuple[StratumId, ...]:
    return tuple(sorted(strata, key=lambda s: (complex_dim[s], s)))


def build_poset(
    strata: Sequence[StratumSpec],
    order_pairs: Sequence[Tuple[StratumId, StratumId]],
    dense: Optional[StratumId] = None,
    name: str = "",
) -> StratPoset:
    """
    Build a stratification poset from strata data and closure pairs.

    Args:
        strata: (id, complex_dim, chi_c) triples
        order_pairs: (lower, upper) pairs meaning lower lies in the closure of upper;
            the relation used is their reflexive-transitive closure
        dense: Optional dense stratum; auto-detected when a unique maximum exists
        name: Optional label

    Returns:
        A validated StratPoset

    Raises:
        DuplicateStratum, UnknownStratum, CycleError, DimOrderError, NoDenseStratum
    """
    complex_dim: Dict[StratumId, int] = {}
    chi_c: Dict[StratumId, int] = {}
    for stratum_id, dim, chi in strata:
        if not isinstance(stratum_id, str) or not stratum_id:
            raise InputError(f"Stratum ids must be nonempty strings, got {stratum_id!r}")
        if stratum_id in complex_dim:
            raise DuplicateStratum(stratum_id)
        if dim < 0:
            raise InputError(f"Stratum {stratum_id!r} has negative complex dimension {dim}")
        complex_dim[stratum_id] = int(dim)
        chi_c[stratum_id] = int(chi)

    where = name or "space"
    graph = nx.DiGraph()
    graph.add_nodes_from(complex_dim)
    for lower, upper in order_pairs:
        for stratum_id in (lower, upper):
            if stratum_id not in complex_dim:
                raise UnknownStratum(stratum_id, where)
        if lower != upper:
            graph.add_edge(lower, upper)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = [edge[0] for edge in nx.find_cycle(graph)]
        raise CycleError(cycle)

    closure = nx.transitive_closure_dag(graph)
    for lower, upper in closure.edges():
        if complex_dim[lower] >= complex_dim[upper]:
            raise DimOrderError(lower, upper, complex_dim[lower], complex_dim[upper])

    below = {s: frozenset(closure.predecessors(s)) | {s} for s in complex_dim}
    above = {s: frozenset(closure.successors(s)) | {s} for s in complex_dim}
    maxima = [s for s in complex_dim if len(above[s]) == 1]

    if dense is not None:
        if dense not in complex_dim:
            raise UnknownStratum(dense, where)
        if len(below[dense]) != len(complex_dim):
            raise NoDenseStratum(f"Stratum {dense!r} is not the unique maximum of {where}")
    elif len(maxima) == 1:
        dense = maxima[0]

    poset = StratPoset(
        strata=_canonical_order(complex_dim, complex_dim),
        complex_dim=complex_dim,
        chi_c=chi_c,
        dense=dense,
        below=below,
        above=above,
        name=name,
    )
    logger.debug(f"Built poset {where}: {len(poset)} strata, dense={dense!r}")
    return poset


def down_set(poset: StratPoset, stratum: StratumId) -> FrozenSet[StratumId]:
    """Return {W : W <= V}, including V itself."""
    return poset.below[poset.require(stratum)]


def linear_extension(poset: StratPoset) -> List[StratumId]:
    return list(poset.strata)


def is_closed(poset: StratPoset, subset: Iterable[StratumId]) -> bool:
    """A union of strata is closed iff it is a down-set."""
    chosen = {poset.require(s) for s in subset}
    return all(poset.below[s] <= chosen for s in chosen)


def restrict_poset(poset: StratPoset, keep: Iterable[StratumId], name: str = "") -> StratPoset:
    """Induced order on a subset of strata; dense is re-detected."""
    kept = {poset.require(s) for s in keep}
    pairs = [(w, v) for (w, v) in poset.comparable_pairs() if w in kept and v in kept]
    specs = [(s, poset.complex_dim[s], poset.chi_c[s]) for s in poset.strata if s in kept]
    return build_poset(specs, pairs, name=name or poset.name)


def closure_subspace(poset: StratPoset, stratum: StratumId) -> StratPoset:
    """The closure of V with its induced stratification; V is its dense stratum."""
    label = f"{poset.name or 'space'}|closure({stratum})"
    return restrict_poset(poset, down_set(poset, stratum), name=label)
