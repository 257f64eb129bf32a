"""
Named spaces and maps used by the worked examples.

Each entry builds a fresh document; maps refer to their spaces by
catalog reference so they go through the same resolution as files.
"""
from typing import Callable, Dict

from packages.strata.errors import UnknownExample

from ..documents.models import KernelEntry, LinkEntry, MapDocument, SpaceDocument, StratumEntry

CATALOG_PREFIX = "catalog:"


def _space(name, strata, order=(), links=None, dense=None) -> SpaceDocument:
    return SpaceDocument(
        name=name,
        strata=[StratumEntry(id=s, complex_dim=d, chi_c=c) for s, d, c in strata],
        order=[list(pair) for pair in order],
        dense=dense,
        links=links,
    )


def smooth_singleton() -> SpaceDocument:
    """A projective line with one stratum"""
    return _space("smooth-singleton", [("Y", 1, 2)], links=[])


def two_chain() -> SpaceDocument:
    """A point in the closure of a curve stratum, generic link value 2"""
    return _space(
        "two-chain",
        [("W", 0, 1), ("S", 1, 1)],
        [("W", "S")],
        [LinkEntry(lower="W", upper="S", ichi_cone=2)],
    )


def blow_up_target() -> SpaceDocument:
    """The projective plane with a marked point; the link of a smooth point is a 3-sphere"""
    return _space(
        "blow-up-target",
        [("p", 0, 1), ("S", 2, 2)],
        [("p", "S")],
        [LinkEntry(lower="p", upper="S", link_ih_betti=[1, 0, 0, 1])],
    )


def blow_up_source() -> SpaceDocument:
    """The blow-up of the projective plane at a point"""
    return _space("blow-up-source", [("X", 2, 4)], links=[])


def nodal_cubic() -> SpaceDocument:
    """Node plus smooth part (a sphere minus two points); the link of the node is two circles"""
    return _space(
        "nodal-cubic",
        [("node", 0, 1), ("S", 1, 0)],
        [("node", "S")],
        [LinkEntry(lower="node", upper="S", ichi_cone=2, link_ih_betti=[2, 2])],
    )


def projective_line() -> SpaceDocument:
    return _space("projective-line", [("X", 1, 2)], links=[])


def three_chain() -> SpaceDocument:
    return _space(
        "three-chain",
        [("a", 0, 1), ("b", 1, 0), ("c", 2, 3)],
        [("a", "b"), ("b", "c")],
        [
            LinkEntry(lower="a", upper="b", ichi_cone=2),
            LinkEntry(lower="a", upper="c", ichi_cone=3),
            LinkEntry(lower="b", upper="c", ichi_cone=5),
        ],
    )


def diamond() -> SpaceDocument:
    """Two incomparable curve strata meeting in a point, under a dense surface stratum"""
    return _space(
        "diamond",
        [("W", 0, 1), ("A", 1, 1), ("B", 1, -1), ("S", 2, 2)],
        [("W", "A"), ("W", "B"), ("A", "S"), ("B", "S")],
        [
            LinkEntry(lower="W", upper="A", ichi_cone=1),
            LinkEntry(lower="W", upper="B", ichi_cone=2),
            LinkEntry(lower="A", upper="S", ichi_cone=1),
            LinkEntry(lower="B", upper="S", ichi_cone=3),
            LinkEntry(lower="W", upper="S", ichi_cone=4),
        ],
    )


def blow_up_map() -> MapDocument:
    """The blow-down: the exceptional projective line lies over p"""
    return MapDocument(
        name="blow-up",
        source=CATALOG_PREFIX + "blow-up-source",
        target=CATALOG_PREFIX + "blow-up-target",
        kernel=[
            KernelEntry(target="p", source="X", chi=2),
            KernelEntry(target="S", source="X", chi=1),
        ],
    )


def nodal_normalization_map() -> MapDocument:
    """Normalization of the nodal cubic: two points over the node"""
    return MapDocument(
        name="nodal-normalization",
        source=CATALOG_PREFIX + "projective-line",
        target=CATALOG_PREFIX + "nodal-cubic",
        kernel=[
            KernelEntry(target="node", source="X", chi=2),
            KernelEntry(target="S", source="X", chi=1),
        ],
    )


def _identity_map(space_name: str, strata) -> Callable[[], MapDocument]:
    def build() -> MapDocument:
        return MapDocument(
            name=f"identity-{space_name}",
            source=CATALOG_PREFIX + space_name,
            target=CATALOG_PREFIX + space_name,
            kernel=[KernelEntry(target=s, source=s, chi=1) for s in strata],
        )
    return build


SPACES: Dict[str, Callable[[], SpaceDocument]] = {
    "smooth-singleton": smooth_singleton,
    "two-chain": two_chain,
    "blow-up-target": blow_up_target,
    "blow-up-source": blow_up_source,
    "nodal-cubic": nodal_cubic,
    "projective-line": projective_line,
    "three-chain": three_chain,
    "diamond": diamond,
}

MAPS: Dict[str, Callable[[], MapDocument]] = {
    "blow-up": blow_up_map,
    "nodal-normalization": nodal_normalization_map,
    "identity-singleton": _identity_map("smooth-singleton", ["Y"]),
    "identity-nodal-cubic": _identity_map("nodal-cubic", ["node", "S"]),
}


def space_document(name: str) -> SpaceDocument:
    try:
        return SPACES[name]()
    except KeyError:
        raise UnknownExample(name, SPACES) from None


def map_document(name: str) -> MapDocument:
    try:
        return MAPS[name]()
    except KeyError:
        raise UnknownExample(name, MAPS) from None
