"""Error hierarchy for the stratified Euler-characteristic calculus"""

from typing import Iterable, Optional, Sequence, Tuple


class StrataError(Exception):
    """Base class for every error raised by the calculus"""


class InputError(StrataError):
    """Invalid input data (maps to exit code 2 on the command line)"""


class DuplicateStratum(InputError):
    def __init__(self, stratum: str):
        self.stratum = stratum
        super().__init__(f"Duplicate stratum id: {stratum!r}")


class UnknownStratum(InputError):
    def __init__(self, stratum: str, where: str = "space"):
        self.stratum = stratum
        super().__init__(f"Unknown stratum {stratum!r} in {where}")


class CycleError(InputError):
    """The closure relation is not antisymmetric"""

    def __init__(self, cycle: Sequence[str]):
        self.cycle = tuple(cycle)
        path = " <= ".join(self.cycle + self.cycle[:1])
        super().__init__(f"Closure order contains a cycle: {path}")


class DimOrderError(InputError):
    """V < W but complex_dim(V) >= complex_dim(W)"""

    def __init__(self, lower: str, upper: str, lower_dim: int, upper_dim: int):
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"Stratum {lower!r} (dim {lower_dim}) lies in the closure of "
            f"{upper!r} (dim {upper_dim}) but is not of strictly smaller dimension"
        )


class NoDenseStratum(InputError):
    def __init__(self, detail: str = "space has no dense stratum (no unique maximum)"):
        super().__init__(detail)


class MissingLinkData(InputError):
    def __init__(self, pairs: Iterable[Tuple[str, str]]):
        self.pairs = tuple(sorted(pairs))
        shown = ", ".join(f"({w}, {v})" for w, v in self.pairs[:8])
        more = "" if len(self.pairs) <= 8 else f" and {len(self.pairs) - 8} more"
        super().__init__(f"Missing link data for pairs: {shown}{more}")


class LinkDataConflict(InputError):
    def __init__(self, lower: str, upper: str, given: int, derived: int):
        self.pair = (lower, upper)
        super().__init__(
            f"Link data for ({lower}, {upper}) disagrees: ichi_cone={given} "
            f"but link_ih_betti gives {derived}"
        )


class InvalidCodim(InputError):
    def __init__(self, codim: int):
        self.codim = codim
        super().__init__(f"Codimension must be a positive integer, got {codim}")


class SpaceMismatch(InputError):
    def __init__(self, message: str = "Operands live on different spaces"):
        super().__init__(message)


class NotUnipotent(InputError):
    def __init__(self, message: str):
        super().__init__(message)


class KernelInconsistent(InputError):
    """Column consistency sum_V chi_c(V) k(V,U) = chi_c(U) fails"""

    def __init__(self, defects: Sequence[Tuple[str, int, int]]):
        self.defects = tuple(defects)
        shown = "; ".join(
            f"{u}: pushed chi {pushed} != chi_c {expected}"
            for u, pushed, expected in self.defects
        )
        super().__init__(f"Kernel violates column consistency ({shown})")


class DocumentError(InputError):
    """A document failed to parse; carries line/field diagnostics"""

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None, field: Optional[str] = None):
        self.path = path
        self.line = line
        self.field = field
        where = []
        if path:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        prefix = f"{': '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class UnknownExample(InputError):
    def __init__(self, name: str, known: Iterable[str]):
        self.name = name
        super().__init__(f"Unknown catalog entry {name!r}; known: {', '.join(sorted(known))}")
