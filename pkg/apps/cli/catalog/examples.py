"""
Worked examples run by the catalog command
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from packages.strata.errors import UnknownExample

from .spaces import CATALOG_PREFIX


@dataclass(frozen=True)
class Example:
    name: str
    description: str
    reference: str
    formulas: Tuple[str, ...]


EXAMPLES: Dict[str, Example] = {
    example.name: example
    for example in (
        Example(
            "smooth-singleton",
            "One smooth stratum: every correction sum is empty",
            CATALOG_PREFIX + "identity-singleton",
            ("eq3", "eq4", "eq6", "eq7", "eq11", "eq13", "eq15", "c1", "c2", "fibration"),
        ),
        Example(
            "two-chain",
            "A point below a curve with link value 2",
            CATALOG_PREFIX + "two-chain",
            ("eq11", "c1", "c2", "degree"),
        ),
        Example(
            "blow-up",
            "Blow-up of the projective plane at a point: 4 = 1*3 + (2-1)*1",
            CATALOG_PREFIX + "blow-up",
            ("eq3", "eq6", "eq7", "eq12", "eq15", "eq16", "pushforward-euler"),
        ),
        Example(
            "nodal-cubic",
            "Nodal cubic: chi 1 = Ichi 2 + (1-2)*1",
            CATALOG_PREFIX + "nodal-cubic",
            ("eq11", "c1", "c2"),
        ),
        Example(
            "nodal-normalization",
            "Normalization of the nodal cubic: Ichi 2 = 1*2 + (2-2)*1",
            CATALOG_PREFIX + "nodal-normalization",
            ("eq6", "eq12", "eq15", "eq17", "eq18"),
        ),
        Example(
            "identity-maps",
            "Identity of the nodal cubic: the multiplicative formulas reduce to the comparison",
            CATALOG_PREFIX + "identity-nodal-cubic",
            ("eq3", "eq6", "eq12", "eq15", "eq17", "c1"),
        ),
    )
}


def get_example(name: str) -> Example:
    try:
        return EXAMPLES[name]
    except KeyError:
        raise UnknownExample(name, EXAMPLES) from None
