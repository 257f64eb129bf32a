"""Free abelian groups on closed-stratum symbols (universal class targets)"""

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping

from .arith import checked, checked_mul

CLOSED = "closed"
IC = "ic"
FAMILIES = (CLOSED, IC)

_PREFIX = {CLOSED: "c*", IC: "Ic*"}


@dataclass(frozen=True, eq=False)
class FormalClass:
    """
    Integer combination of symbols, one symbol per stratum closure.

    The closed family stands for c_*(1_{V closure}); the ic family for
    c_*(ic_{V closure}). Classes of different families never combine.
    """
    family: str
    coefficients: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown symbol family {self.family!r}")
        sparse = {k: checked(v) for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", sparse)

    def _same_family(self, other: "FormalClass") -> None:
        if self.family != other.family:
            raise TypeError(
                f"Cannot combine {self.family}-family and {other.family}-family classes"
            )

    def __add__(self, other: Any) -> "FormalClass":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, FormalClass):
            return NotImplemented
        self._same_family(other)
        merged = dict(self.coefficients)
        for key, value in other.coefficients.items():
            merged[key] = checked(merged.get(key, 0) + value)
        return FormalClass(self.family, merged)

    __radd__ = __add__

    def __neg__(self) -> "FormalClass":
        return FormalClass(self.family, {k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "FormalClass") -> "FormalClass":
        return self + (-other)

    def __mul__(self, scalar: int) -> "FormalClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return FormalClass(self.family, {k: checked_mul(v, scalar) for k, v in self.coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coefficients
        if not isinstance(other, FormalClass):
            return NotImplemented
        return self.family == other.family and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.family, tuple(sorted(self.coefficients.items()))))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        prefix = _PREFIX[self.family]
        parts = []
        for key in sorted(self.coefficients):
            value = self.coefficients[key]
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            body = f"{prefix}[{key}]" if magnitude == 1 else f"{magnitude}·{prefix}[{key}]"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {"family": self.family, "terms": dict(sorted(self.coefficients.items()))}


def zero(family: str) -> FormalClass:
    return FormalClass(family, {})


def symbol(family: str, stratum: str) -> FormalClass:
    return FormalClass(family, {stratum: 1})


def degree(cls: FormalClass, weights: Mapping[str, int]) -> int:
    """Substitute an integer for each symbol (e.g. chi of each closure)."""
    total = 0
    for key, value in cls.coefficients.items():
        total = checked(total + checked_mul(value, weights[key]))
    return total
