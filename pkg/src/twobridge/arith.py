"""Exact rational and continued fraction arithmetic.

Expansions use the convention

    r0 + 1/(b1 + 1/(b2 + ... + 1/bj))

with every term nonzero. Everything here is exact; no floats are used.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, DomainError

__all__ = [
    "Expansion",
    "cf_value",
    "positive_expansion",
    "even_expansion",
    "same_knot_class",
    "enumerate_ht_expansions",
    "default_max_len",
    "knot_fraction",
    "parse_fraction",
    "format_fraction",
]


@dataclass(frozen=True, order=True)
class Expansion:
    """A finite continued fraction ``integer_part + [terms]``."""

    terms: tuple[int, ...]
    integer_part: int = 0

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if any(t == 0 for t in self.terms):
            raise DomainError(f"continued fraction terms must be nonzero: {self.terms}")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __str__(self):
        body = "[" + ",".join(str(t) for t in self.terms) + "]"
        if self.integer_part:
            return f"{self.integer_part}+{body}"
        return body

    @property
    def value(self) -> Fraction:
        return cf_value(self)

    @classmethod
    def parse(cls, text: str) -> "Expansion":
        """Parse ``"[5,4,3,6]"`` or ``"1+[-2,2]"``."""
        m = re.fullmatch(r"\s*(?:(-?\d+)\s*\+\s*)?\[\s*([-\d,\s]*)\]\s*", text)
        if m is None:
            raise DomainError(f"cannot parse expansion {text!r}")
        r0 = int(m.group(1)) if m.group(1) else 0
        body = m.group(2).strip()
        terms = tuple(int(t) for t in body.split(",")) if body else ()
        return cls(terms, r0)


def cf_value(e: Expansion) -> Fraction:
    """Evaluate an expansion by back-substitution from the last term."""
    # tail = num/den, kept as an unreduced integer pair
    num, den = 0, 1
    for b in reversed(e.terms):
        denom = b * den + num
        if denom == 0:
            raise DivisionByZero(f"vanishing denominator while evaluating {e}")
        num, den = den, denom
    return e.integer_part + Fraction(num, den)


def positive_expansion(f: Fraction) -> Expansion:
    """The all-positive expansion of ``f`` in (0, 1), last term at least 2."""
    f = Fraction(f)
    if not 0 < f < 1:
        raise DomainError(f"positive expansion needs 0 < f < 1, got {f}")
    terms = []
    num, den = f.numerator, f.denominator
    # Euclid on den/num; the final quotient is >= 2 because the last remainder is < 1.
    while num:
        q, r = divmod(den, num)
        terms.append(q)
        den, num = num, r
    return Expansion(tuple(terms))


def even_expansion(f: Fraction) -> Expansion:
    """The unique expansion of ``f`` with every term even.

    Each step picks the even integer nearest the reciprocal, which keeps the
    tail strictly inside (-1, 1). Fractions with odd numerator and odd
    denominator have no such expansion.
    """
    f = Fraction(f)
    if f == 0 or not -1 < f < 1:
        raise DomainError(f"even expansion needs f in (-1, 1) minus 0, got {f}")
    if f.numerator % 2 and f.denominator % 2:
        raise DomainError(f"{f} has odd numerator and odd denominator; no even expansion")
    terms = []
    x = f
    while x:
        inv = 1 / x
        b = 2 * round(inv / 2)
        terms.append(b)
        x = inv - b
    return Expansion(tuple(terms))


def same_knot_class(f1: Fraction, f2: Fraction) -> bool:
    """True iff ``f1`` and ``f2`` differ by an integer (denominators must match)."""
    f1, f2 = Fraction(f1), Fraction(f2)
    if f1.denominator != f2.denominator:
        raise DomainError(f"denominators differ: {f1} vs {f2}")
    return (f1 - f2).denominator == 1


def default_max_len(f: Fraction) -> int:
    """Length bound for the brute-force search: sum of terms plus count."""
    n = positive_expansion(f)
    return sum(n.terms) + len(n)


def _max_abs_tail(length: int) -> Fraction:
    # Largest |value| of an expansion with at most `length` terms, all |b| >= 2:
    # attained by [2,-2,2,...] and equal to length/(length+1).
    return Fraction(length, length + 1)


def enumerate_ht_expansions(f: Fraction, max_len: int | None = None) -> set[Expansion]:
    """Brute-force every expansion of ``f`` (mod 1) with all |b_i| >= 2.

    Depth-first over the leading term: a target value v forces b1 + tail = 1/v
    with |tail| < 1, so at most two integers are candidates at each level. A
    branch is cut as soon as the residual tail cannot be reached by the
    remaining number of terms.

    The integer part of each result is set so that its value equals ``f``.
    """
    f = Fraction(f)
    if not 0 < f < 1:
        raise DomainError(f"expected 0 < f < 1, got {f}")
    if max_len is None:
        max_len = default_max_len(f)
    found = set()

    def dfs(target, prefix, r0):
        if target == 0:
            if prefix:
                found.add(Expansion(tuple(prefix), r0))
            return
        remaining = max_len - len(prefix)
        if remaining <= 0 or abs(target) > _max_abs_tail(remaining):
            return
        inv = 1 / target
        lo = inv.numerator // inv.denominator
        for b in (lo, lo + 1):
            tail = inv - b
            if abs(b) < 2 or abs(tail) >= 1:
                continue
            prefix.append(b)
            dfs(tail, prefix, r0)
            prefix.pop()

    # Terms with |b| >= 2 keep the value in (-1, 1), so only f and f - 1 qualify.
    dfs(f, [], 0)
    dfs(f - 1, [], 1)
    return found


def parse_fraction(text: str) -> Fraction:
    """Parse ``"beta/alpha"``."""
    m = re.fullmatch(r"\s*(-?\d+)\s*/\s*(-?\d+)\s*", text)
    if m is None:
        raise DomainError(f"cannot parse fraction {text!r}")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def knot_fraction(beta: int | Fraction, alpha: int | None = None) -> Fraction:
    """Canonical knot fraction beta/alpha with 0 < beta < alpha, alpha odd >= 3.

    Any representative is accepted; beta is reduced modulo alpha.
    """
    if alpha is None:
        f = Fraction(beta)
        beta, alpha = f.numerator, f.denominator
    if alpha < 0:
        beta, alpha = -beta, -alpha
    if alpha < 3 or alpha % 2 == 0:
        raise DomainError(f"2-bridge knots need odd alpha >= 3, got {alpha}")
    if gcd(beta, alpha) != 1:
        raise DomainError(f"beta/alpha must be reduced, got {beta}/{alpha}")
    return Fraction(beta % alpha, alpha)
