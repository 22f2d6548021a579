"""Per-surface invariants of a 2-bridge knot and its CGLS seminorm."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .arith import (
    Expansion,
    cf_value,
    enumerate_ht_expansions,
    even_expansion,
    knot_fraction,
    positive_expansion,
    same_knot_class,
)
from .errors import DomainError, IntegralityViolation
from .errors import NotAllowable
from .smoothing import Smoothing, enumerate_allowable, generate_expansion, is_allowable

__all__ = [
    "Surface",
    "PeripheralCurve",
    "boundary_slope",
    "is_orientable",
    "deltas",
    "weight_from_smoothing",
    "weight_from_expansion",
    "build_surfaces",
    "cgls_seminorm",
    "seminorm_coefficients",
    "seminorm_grid",
    "crosscheck_expansions",
    "CrosscheckReport",
]


@dataclass(frozen=True)
class PeripheralCurve:
    p: int
    q: int


@dataclass(frozen=True)
class Surface:
    alpha: int
    beta: int
    n: Expansion
    eps: Smoothing
    m: Expansion
    slope: int
    orientable: bool
    deltas: tuple[int, ...]
    weight: int

    def to_record(self) -> dict:
        """Flat JSON-ready record; field names are part of the output format."""
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "n": list(self.n.terms),
            "eps": str(self.eps),
            "m": list(self.m.terms),
            "slope": self.slope,
            "orientable": self.orientable,
            "weight": self.weight,
            "deltas": list(self.deltas),
        }


def _sigma(e: Expansion) -> int:
    return sum((1 if t > 0 else -1) * (1 if i % 2 == 0 else -1) for i, t in enumerate(e.terms))


def _even_representative(f: Fraction) -> Fraction:
    # The member of f's class in (-1, 1) with even numerator (alpha odd).
    f = f - (f.numerator // f.denominator)
    return f if f.numerator % 2 == 0 else f - 1


def boundary_slope(m: Expansion, f: Fraction) -> int:
    """Boundary slope of the surface carried by ``m``.

    Twice the alternating sign count of ``m`` minus that of the all-even
    expansion of the knot. The global sign is a convention; mirror images
    negate every slope.
    """
    f = Fraction(f)
    if any(abs(t) < 2 for t in m.terms):
        raise DomainError(f"slope needs all |m_i| >= 2, got {m}")
    if not same_knot_class(cf_value(m), f):
        raise DomainError(f"{m} does not expand the class of {f}")
    return 2 * (_sigma(m) - _seifert_sigma(f))


def _seifert_sigma(f: Fraction) -> int:
    rep = _even_representative(f)
    if rep == 0:
        raise DomainError(f"{f} has no nonzero even representative")
    return _sigma(even_expansion(rep))


def is_orientable(m: Expansion) -> bool:
    return all(t % 2 == 0 for t in m.terms)


def _halve(numerator: int, what) -> int:
    if numerator % 2:
        raise IntegralityViolation(f"odd weight numerator {numerator} for {what}")
    return numerator // 2


def deltas(n: Expansion, s: Smoothing) -> tuple[int, ...]:
    out = []
    for i in range(1, len(n) + 1):
        if s.eps_at(i):
            out.append(1)
        else:
            out.append(n[i - 1] - 1 + s.eps_at(i - 1) + s.eps_at(i + 1))
    return tuple(out)


def weight_from_smoothing(n: Expansion, s: Smoothing) -> int:
    """Weight from the twist data: (gamma + prod(delta_i)) / 2."""
    if not is_allowable(n, s):
        raise NotAllowable(f"smoothing {s} is not allowable for {n}")
    gamma = -1 if is_orientable(generate_expansion(n, s)) else 0
    return _halve(gamma + prod(deltas(n, s)), (n, s))


def weight_from_expansion(m: Expansion) -> int:
    """Weight from the generated expansion: (gamma + prod(|m_i| - 1)) / 2."""
    if any(abs(t) < 2 for t in m.terms):
        raise DomainError(f"weight needs all |m_i| >= 2, got {m}")
    gamma = -1 if is_orientable(m) else 0
    return _halve(gamma + prod(abs(t) - 1 for t in m.terms), m)


def build_surfaces(f) -> list[Surface]:
    """One record per allowable smoothing, in lexicographic smoothing order."""
    f = knot_fraction(f)
    n = positive_expansion(f)
    sigma0 = _seifert_sigma(f)
    out = []
    for s in enumerate_allowable(n):
        m = generate_expansion(n, s)
        orientable = is_orientable(m)
        ds = deltas(n, s)
        out.append(
            Surface(
                alpha=f.denominator,
                beta=f.numerator,
                n=n,
                eps=s,
                m=m,
                slope=2 * (_sigma(m) - sigma0),
                orientable=orientable,
                deltas=ds,
                weight=_halve((-1 if orientable else 0) + prod(ds), (n, s)),
            )
        )
    return out


def seminorm_coefficients(f, surfaces=None) -> tuple[np.ndarray, np.ndarray]:
    """Slopes and products with 2*||(p,q)|| = sum(products * |p - slopes*q|) - |p|."""
    if surfaces is None:
        surfaces = build_surfaces(f)
    slopes = np.array([s.slope for s in surfaces], dtype=np.int64)
    prods = np.array([prod(abs(t) - 1 for t in s.m.terms) for s in surfaces], dtype=np.int64)
    return slopes, prods


def cgls_seminorm(f, c: PeripheralCurve | tuple[int, int]) -> int:
    if not isinstance(c, PeripheralCurve):
        c = PeripheralCurve(*c)
    twice = -abs(c.p)
    for s in build_surfaces(f):
        twice += abs(c.p - s.slope * c.q) * prod(abs(t) - 1 for t in s.m.terms)
    return _halve(twice, (f, c))


def seminorm_grid(f, p, q, surfaces=None) -> np.ndarray:
    """Vectorised seminorm over broadcastable integer arrays ``p`` and ``q``.

    Pass ``surfaces`` to reuse the output of :func:`build_surfaces`.
    """
    slopes, prods = seminorm_coefficients(f, surfaces)
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    terms = np.abs(p[..., None] - slopes * q[..., None]) * prods
    twice = terms.sum(axis=-1) - np.abs(p)
    if np.any(twice % 2):
        raise IntegralityViolation(f"odd doubled seminorm for {f}")
    return twice // 2


@dataclass
class CrosscheckReport:
    fraction: Fraction
    generated: set[Expansion]
    brute_force: set[Expansion]

    @property
    def missing(self) -> set[Expansion]:
        """Found by brute force but not generated by any smoothing."""
        return self.brute_force - self.generated

    @property
    def extra(self) -> set[Expansion]:
        return self.generated - self.brute_force

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def to_record(self) -> dict:
        return {
            "alpha": self.fraction.denominator,
            "beta": self.fraction.numerator,
            "match": self.ok,
            "generated": sorted(str(e) for e in self.generated),
            "brute_force": sorted(str(e) for e in self.brute_force),
            "missing": sorted(str(e) for e in self.missing),
            "extra": sorted(str(e) for e in self.extra),
        }


def crosscheck_expansions(f, max_len: int | None = None) -> CrosscheckReport:
    f = knot_fraction(f)
    n = positive_expansion(f)
    generated = {generate_expansion(n, s) for s in enumerate_allowable(n)}
    return CrosscheckReport(f, generated, enumerate_ht_expansions(f, max_len))
