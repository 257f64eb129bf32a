"""
Turn documents into calculus objects and back, resolving catalog references
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from packages.strata.errors import InputError
from packages.strata.functions import ConstrFn, from_values
from packages.strata.ic import LinkSystem, build_link_system
from packages.strata.poset import StratPoset, build_poset
from packages.strata.pushforward import ProperMapKernel, build_kernel, identity_kernel

from ..catalog.spaces import CATALOG_PREFIX, MAPS, map_document, space_document
from .codec import is_map_text, parse_function, parse_map, parse_space, read_text
from .models import KernelEntry, LinkEntry, MapDocument, SpaceDocument, StratumEntry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedInput:
    """
    What a command works on. A space document loads as its identity map, so
    map formulas run on it and the source and target coincide.
    """
    kind: str
    name: str
    kernel: ProperMapKernel
    target_links: LinkSystem
    source_links: LinkSystem

    @property
    def target(self) -> StratPoset:
        return self.kernel.target

    @property
    def source(self) -> StratPoset:
        return self.kernel.source


def space_from_document(document: SpaceDocument) -> Tuple[StratPoset, LinkSystem]:
    """
    Raises:
        InputError subclasses from poset and link validation
    """
    space = build_poset(
        [(s.id, s.complex_dim, s.chi_c) for s in document.strata],
        [(pair[0], pair[1]) for pair in document.order],
        dense=document.dense,
        name=document.name,
    )
    cone: Dict[Tuple[str, str], int] = {}
    betti: Dict[Tuple[str, str], List[int]] = {}
    seen = set()
    for entry in document.links or []:
        pair = (entry.lower, entry.upper)
        if pair in seen:
            raise InputError(f"Link data for ({entry.lower}, {entry.upper}) is given twice")
        seen.add(pair)
        if entry.ichi_cone is not None:
            cone[pair] = entry.ichi_cone
        if entry.link_ih_betti is not None:
            betti[pair] = entry.link_ih_betti
    return space, build_link_system(space, cone, betti)


def space_to_document(space: StratPoset, links: Optional[LinkSystem] = None) -> SpaceDocument:
    """Canonical document: strata in canonical order, Hasse-diagram order pairs"""
    entries = None
    if links is not None:
        entries = []
        for pair in space.comparable_pairs():
            if pair not in links.cone:
                continue
            betti = links.betti.get(pair)
            entries.append(LinkEntry(
                lower=pair[0],
                upper=pair[1],
                ichi_cone=links.cone[pair],
                link_ih_betti=list(betti) if betti is not None else None,
            ))
    return SpaceDocument(
        name=space.name,
        strata=[StratumEntry(id=s, complex_dim=space.complex_dim[s], chi_c=space.chi_c[s]) for s in space.strata],
        order=[list(pair) for pair in space.covering_pairs()],
        dense=space.dense,
        links=entries,
    )


def resolve_space(reference: Union[SpaceDocument, str]) -> SpaceDocument:
    if isinstance(reference, SpaceDocument):
        return reference
    if reference.startswith(CATALOG_PREFIX):
        return space_document(reference[len(CATALOG_PREFIX):])
    return parse_space(read_text(reference), reference)


def kernel_from_document(
    document: MapDocument,
    skip_validation: bool = False,
) -> Tuple[ProperMapKernel, LinkSystem, LinkSystem]:
    """
    Returns:
        (kernel, source links, target links)

    Raises:
        KernelInconsistent: column consistency fails and the document does not waive it
    """
    source, source_links = space_from_document(resolve_space(document.source))
    target, target_links = space_from_document(resolve_space(document.target))
    entries: Dict[Tuple[str, str], int] = {}
    for entry in document.kernel:
        pair = (entry.target, entry.source)
        if pair in entries:
            raise InputError(f"Kernel entry ({entry.target}, {entry.source}) is given twice")
        entries[pair] = entry.chi
    validate = document.validate_kernel and not skip_validation
    kernel = build_kernel(source, target, entries, validate=validate)
    return kernel, source_links, target_links


def kernel_to_document(
    kernel: ProperMapKernel,
    source_links: Optional[LinkSystem] = None,
    target_links: Optional[LinkSystem] = None,
    name: str = "",
) -> MapDocument:
    return MapDocument(
        name=name,
        source=space_to_document(kernel.source, source_links),
        target=space_to_document(kernel.target, target_links),
        kernel=[
            KernelEntry(target=v, source=u, chi=kernel.entries[(v, u)])
            for v in kernel.target.strata for u in kernel.source.strata
            if (v, u) in kernel.entries
        ],
        validate_kernel=kernel.validated,
    )


def function_from_document(values: Dict[str, int], space: StratPoset) -> ConstrFn:
    return from_values(space, values)


def load_function(path: str, space: StratPoset) -> ConstrFn:
    document = parse_function(read_text(path), path)
    return function_from_document(document.root, space)


def load_input(reference: str, skip_validation: bool = False) -> LoadedInput:
    """
    Load a space or map from a file path or a catalog:<name> reference.

    Raises:
        DocumentError, UnknownExample and the validation errors of the calculus
    """
    if reference.startswith(CATALOG_PREFIX):
        name = reference[len(CATALOG_PREFIX):]
        if name in MAPS:
            return _load_map(map_document(name), skip_validation)
        return _load_space(space_document(name))
    text = read_text(reference)
    if is_map_text(text):
        return _load_map(parse_map(text, reference), skip_validation)
    return _load_space(parse_space(text, reference))


def _load_space(document: SpaceDocument) -> LoadedInput:
    space, links = space_from_document(document)
    logger.info(f"Loaded space {space.name or '(unnamed)'} with {len(space)} strata")
    return LoadedInput(
        kind="space", name=document.name, kernel=identity_kernel(space), target_links=links, source_links=links,
    )


def _load_map(document: MapDocument, skip_validation: bool) -> LoadedInput:
    kernel, source_links, target_links = kernel_from_document(document, skip_validation)
    logger.info(
        f"Loaded map {document.name or '(unnamed)'}: {len(kernel.source)} source strata, "
        f"{len(kernel.target)} target strata, validated={kernel.validated}"
    )
    return LoadedInput(
        kind="map", name=document.name, kernel=kernel, target_links=target_links, source_links=source_links,
    )
