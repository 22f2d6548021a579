"""Conjectured weights for the nine essential surfaces of a (p, q, r) pretzel knot.

These values are conjectural. Every record carries ``conjectural=True`` and
that flag is written in every serialisation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = ["PretzelSurfaceRecord", "pretzel_surface_table", "SLOPES_357"]

# Boundary slopes are only known here for (3, 5, 7), in table order.
SLOPES_357 = {
    "TypeIII": (0, -16, -20, -24, -30),
    "TypeII": (0, -4, -8, -12),
}

_FORMULAS = (
    ("TypeIII", "(p-1)(q-1)(r-1)/2", lambda p, q, r: (p - 1) * (q - 1) * (r - 1) // 2),
    ("TypeIII", "(r-1)/2", lambda p, q, r: (r - 1) // 2),
    ("TypeIII", "(q-1)/2", lambda p, q, r: (q - 1) // 2),
    ("TypeIII", "(p-1)/2", lambda p, q, r: (p - 1) // 2),
    ("TypeIII", "1", lambda p, q, r: 1),
    ("TypeII", "(pqr-1)/2", lambda p, q, r: (p * q * r - 1) // 2),
    ("TypeII", "(qr-1)/2", lambda p, q, r: (q * r - 1) // 2),
    ("TypeII", "(pr-1)/2", lambda p, q, r: (p * r - 1) // 2),
    ("TypeII", "(pq-1)/2", lambda p, q, r: (p * q - 1) // 2),
)


@dataclass(frozen=True)
class PretzelSurfaceRecord:
    surface_type: str
    weight_formula_id: str
    weight: int
    slope: int | None = None
    conjectural: bool = True

    def to_record(self) -> dict:
        return {
            "surface_type": self.surface_type,
            "weight_formula_id": self.weight_formula_id,
            "weight": self.weight,
            "slope": self.slope,
            "conjectural": True,
        }


def pretzel_surface_table(p: int, q: int, r: int) -> list[PretzelSurfaceRecord]:
    for name, x in (("p", p), ("q", q), ("r", r)):
        if x <= 1 or x % 2 == 0:
            raise DomainError(f"{name} must be odd and > 1, got {x}")
    slopes = {"TypeIII": iter(SLOPES_357["TypeIII"]), "TypeII": iter(SLOPES_357["TypeII"])}
    known = (p, q, r) == (3, 5, 7)
    out = []
    for kind, fid, fn in _FORMULAS:
        slope = next(slopes[kind]) if known else None
        out.append(PretzelSurfaceRecord(kind, fid, fn(p, q, r), slope))
    return out
