from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping

from .euclid import Point

__all__ = ["VerificationRecord", "make_record"]


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of one numerical identity check.

    ``passed`` always equals ``residual <= tolerance_used``; build records
    through :func:`make_record` so that holds by construction.
    ``group`` is the property number (1-7) the check belongs to, or 0 for
    facts outside the numbered list.
    """

    property_name: str
    passed: bool
    lhs: float
    rhs: float
    residual: float
    tolerance_used: float
    witness_points: Dict[str, Point] = field(default_factory=dict)
    group: int = 0

    def __post_init__(self):
        if self.passed != (self.residual <= self.tolerance_used):
            raise ValueError("passed must equal residual <= tolerance_used")

    def to_dict(self) -> dict:
        return {
            "property_name": self.property_name,
            "group": self.group,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tolerance_used": self.tolerance_used,
            "witness_points": {k: [p.x, p.y] for k, p in self.witness_points.items()},
        }


def make_record(
    name: str,
    lhs: float,
    rhs: float,
    tolerance: float,
    witness: Mapping[str, Point] | None = None,
    group: int = 0,
    residual: float | None = None,
) -> VerificationRecord:
    if residual is None:
        residual = abs(lhs - rhs)
    return VerificationRecord(
        property_name=name,
        passed=bool(residual <= tolerance),
        lhs=float(lhs),
        rhs=float(rhs),
        residual=float(residual),
        tolerance_used=float(tolerance),
        witness_points=dict(witness or {}),
        group=group,
    )
