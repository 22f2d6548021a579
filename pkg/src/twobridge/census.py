"""Invariant checks over every 2-bridge knot up to a given alpha."""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import IntegralityViolation
from .surface import build_surfaces, crosscheck_expansions, weight_from_expansion
from .tree import assemble_basic_tree, enumerate_actions, weight_from_tree

log = logging.getLogger(__name__)

__all__ = ["knot_fractions", "canonical_fractions", "check_knot", "run_census", "CensusResult"]


def knot_fractions(max_alpha: int):
    """Every beta/alpha with odd 3 <= alpha <= max_alpha and 0 < beta < alpha."""
    for alpha in range(3, max_alpha + 1, 2):
        for beta in range(1, alpha):
            if gcd(alpha, beta) == 1:
                yield Fraction(beta, alpha)


def canonical_fractions(max_alpha: int):
    """One fraction per knot class under beta -> beta^-1 mod alpha."""
    for f in knot_fractions(max_alpha):
        alpha, beta = f.denominator, f.numerator
        if beta <= pow(beta, -1, alpha):
            yield f


def _multiset(surfaces, key):
    return Counter(key(s) for s in surfaces)


def check_knot(f: Fraction, with_actions: bool = True) -> list[str]:
    """Run every census invariant for one knot; return violation messages."""
    alpha, beta = f.denominator, f.numerator
    tag = f"{beta}/{alpha}"
    problems = []
    try:
        surfaces = build_surfaces(f)
    except IntegralityViolation as exc:
        return [f"{tag}: integrality: {exc}"]

    report = crosscheck_expansions(f)
    if not report.ok:
        problems.append(
            f"{tag}: oracle mismatch, missing {sorted(map(str, report.missing))} "
            f"extra {sorted(map(str, report.extra))}"
        )

    for s in surfaces:
        tree = assemble_basic_tree(s.n, s.eps)
        w_exp = weight_from_expansion(s.m)
        w_tree = weight_from_tree(tree, s.m)
        counts = [s.weight, w_exp, w_tree]
        if with_actions:
            counts.append(len(enumerate_actions(tree, s.m)))
        if len(set(counts)) != 1:
            problems.append(f"{tag} {s.eps}: weights disagree {counts}")
        if s.orientable and s.slope != 0:
            problems.append(f"{tag} {s.eps}: orientable surface with slope {s.slope}")

    mirror = build_surfaces(Fraction(alpha - beta, alpha))
    if _multiset(surfaces, lambda s: -s.slope) != _multiset(mirror, lambda s: s.slope):
        problems.append(f"{tag}: mirror slopes are not negated")
    if _multiset(surfaces, lambda s: s.weight) != _multiset(mirror, lambda s: s.weight):
        problems.append(f"{tag}: mirror weights differ")

    inverse = build_surfaces(Fraction(pow(beta, -1, alpha), alpha))
    key = lambda s: (s.slope, s.weight)  # noqa: E731
    if _multiset(surfaces, key) != _multiset(inverse, key):
        problems.append(f"{tag}: beta^-1 representative gives different surfaces")
    return problems


@dataclass
class CensusResult:
    max_alpha: int
    knots: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def run_census(max_alpha: int, jobs: int = 1) -> CensusResult:
    """Check one representative per knot class; results come back in knot order."""
    fractions = list(canonical_fractions(max_alpha))
    result = CensusResult(max_alpha, len(fractions))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = pool.map(check_knot, fractions, chunksize=64)
            for problems in batches:
                result.violations.extend(problems)
    else:
        for f in fractions:
            result.violations.extend(check_knot(f))
    log.info("census to alpha %d: %d knots, %d violations", max_alpha, result.knots, len(result.violations))
    return result
