"""Formula check reports with per-stratum term breakdowns"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

FORMULA_TITLES = {
    "eq3": "f_*(alpha) = chi(alpha|F) 1_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) hat(V)",
    "eq4": "chi(alpha) = chi(alpha|F) chi(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) chi-hat(V)",
    "eq5": "f_* c_*(alpha) = chi(alpha|F) c_*(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) c-hat(V)",
    "eq6": "chi(X) = chi(F) chi(Y) + sum_{V<S} (chi(F_V) - chi(F)) chi-hat(V)",
    "eq7": "f_* c_*(X) = chi(F) c_*(Y) + sum_{V<S} (chi(F_V) - chi(F)) c-hat(V)",
    "eq11": "alpha = alpha(S) ic_Y + sum_{V<S} (alpha(V) - alpha(S) Ichi(cL_{V,Y})) ic-hat(V)",
    "eq12": "f_*(alpha) = chi(alpha|F) ic_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) Ichi(cL_{V,Y})) ic-hat(V)",
    "eq13": "chi(alpha) = chi(alpha|F) Ichi(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) Ichi(cL_{V,Y})) Ichi-hat(V)",
    "eq14": "f_* c_*(alpha) = chi(alpha|F) Ic_*(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) Ichi(cL_{V,Y})) Ic-hat(V)",
    "eq15": "chi(X) = chi(F) Ichi(Y) + sum_{V<S} (chi(F_V) - chi(F) Ichi(cL_{V,Y})) Ichi-hat(V)",
    "eq16": "f_* c_*(X) = chi(F) Ic_*(Y) + sum_{V<S} (chi(F_V) - chi(F) Ichi(cL_{V,Y})) Ic-hat(V)",
    "eq17": "Ichi(X) = Ichi(F) Ichi(Y) + sum_{V<S} (Ichi(f^-1 cL_{V,Y}) - Ichi(F) Ichi(cL_{V,Y})) Ichi-hat(V)",
    "eq18": "f_* Ic_*(X) = Ichi(F) Ic_*(Y) + sum_{V<S} (Ichi(f^-1 cL_{V,Y}) - Ichi(F) Ichi(cL_{V,Y})) Ic-hat(V)",
    "c1": "chi(Y) = Ichi(Y) + sum_{V<S} (1 - Ichi(cL_{V,Y})) Ichi-hat(V)",
    "c2": "c_*(Y) = Ic_*(Y) + sum_{V<S} (1 - Ichi(cL_{V,Y})) Ic-hat(V)",
    "fibration": "chi(X) = chi(Y) chi(F) for a submersion onto a single stratum",
    "pushforward-euler": "chi(f_*(alpha)) = chi(alpha)",
    "degree": "chi(alpha) = deg c_*(alpha)",
    "additivity": "chi(Y) = chi(Z) + chi_c(Y - Z)",
}


def render_value(value: Any) -> Any:
    """JSON-ready form of an integer, formal class, or constructible function."""
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {k: render_value(v) for k, v in sorted(value.items())}
    return value


@dataclass(frozen=True)
class Term:
    """One summand of a right-hand side: coefficient times a basis value"""
    stratum: str
    label: str
    coefficient: int
    value: Any

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stratum": self.stratum,
            "label": self.label,
            "coefficient": self.coefficient,
            "value": render_value(self.value),
        }


@dataclass(frozen=True)
class FormulaReport:
    """
    Outcome of checking one identity. passed is True iff left == right exactly.
    """
    formula: str
    title: str
    left: Any
    right: Any
    terms: List[Term] = field(default_factory=list)
    passed: bool = False
    context: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "formula": self.formula,
            "title": self.title,
            "left": render_value(self.left),
            "right": render_value(self.right),
            "terms": [t.to_dict() for t in self.terms],
            "passed": self.passed,
            "context": render_value(self.context),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.formula}: {self.left} = {self.right}"

    def explain(self) -> str:
        """Multi-line human rendering: the identity and each summand"""
        lines = [self.summary(), f"    {self.title}"]
        for term in self.terms:
            lines.append(
                f"    {term.label:<28} {term.stratum:<12} coeff {term.coefficient:>6}  value {term.value}"
            )
        return "\n".join(lines)


def make_report(formula: str, left: Any, right: Any,
                terms: Optional[List[Term]] = None,
                context: Optional[Dict[str, Any]] = None,
                title: Optional[str] = None) -> FormulaReport:
    return FormulaReport(
        formula=formula,
        title=title or FORMULA_TITLES.get(formula, formula),
        left=left,
        right=right,
        terms=list(terms or []),
        passed=bool(left == right),
        context=dict(context or {}),
    )
