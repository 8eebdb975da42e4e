"""
Verdicts, per-(case, m) check reports and their JSON / text renderings.
"""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

SCHEMA_VERSION = 1


class Verdict(Enum):
    """Outcome of one dimension count."""
    STRICT = "strict"
    EQUALITY_OK = "equality-ok"
    EXCEPTIONAL = "exceptional"
    SCALAR = "scalar"

    @property
    def mark(self) -> str:
        return {"strict": "<", "equality-ok": "=", "exceptional": "!", "scalar": "*"}[self.value]


@dataclass(frozen=True)
class CheckReport:
    """
    One inequality check for a case (orbit or stratum) at subspace dimension m.

    Attributes:
        case: orbit label or stratum id
        m: subspace dimension
        base_dim: orbit dimension or conjugacy class dimension
        d_m: maximal dimension of the stable m-subspace family
        rhs: m (n - m), the Grassmannian dimension
        verdict: classification of lhs against rhs
        profiles: optimal (f_i) or (gamma_p) when requested
    """
    case: str
    m: int
    base_dim: int
    d_m: int
    rhs: int
    verdict: Verdict
    profiles: Optional[Tuple[Tuple[int, ...], ...]] = None

    @property
    def lhs(self) -> int:
        return self.base_dim + self.d_m

    @property
    def excess(self) -> int:
        return self.lhs - self.rhs

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "case": self.case,
            "m": self.m,
            "base_dim": self.base_dim,
            "d_m": self.d_m,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict.value,
        }
        if self.profiles is not None:
            data["profiles"] = [list(p) for p in self.profiles]
        return data


def grassmannian_dim(m: int, n: int) -> int:
    return m * (n - m)


def unipotent_verdict(lhs: int, rhs: int) -> Verdict:
    """Equality is acceptable: scaling the nilpotent gives a positive-dimensional fibre."""
    if lhs < rhs:
        return Verdict.STRICT
    if lhs == rhs:
        return Verdict.EQUALITY_OK
    return Verdict.EXCEPTIONAL


def semisimple_verdict(lhs: int, rhs: int) -> Verdict:
    """Equality is reported as exceptional."""
    return Verdict.STRICT if lhs < rhs else Verdict.EXCEPTIONAL


def exceptional_ms(reports: Iterable[CheckReport]) -> List[int]:
    return sorted(r.m for r in reports if r.verdict is Verdict.EXCEPTIONAL)


def to_json(payload: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Plain fixed-width table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for index, row in enumerate(cells):
        lines.append("  ".join(value.ljust(widths[i]) for i, value in enumerate(row)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def verdict_marks(reports: Sequence[CheckReport]) -> str:
    """Compact per-m marks such as "m3= m4< ..."."""
    return " ".join(f"m{r.m}{r.verdict.mark}" for r in sorted(reports, key=lambda r: r.m))
