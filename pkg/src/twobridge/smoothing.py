"""Allowable smoothings of the standard diagram and the expansions they generate."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import Expansion, cf_value
from .errors import DomainError, LengthMismatch, NotAllowable

__all__ = [
    "Smoothing",
    "is_allowable",
    "enumerate_allowable",
    "generate_expansion",
]


@dataclass(frozen=True, order=True)
class Smoothing:
    """One bit per twist: 0 horizontal, 1 vertical.

    Out-of-range indices read as 0, matching the sentinel twists at both ends.
    Indexing is 1-based through :meth:`eps_at`.
    """

    eps: tuple[int, ...]

    def __post_init__(self):
        eps = tuple(int(e) for e in self.eps)
        if any(e not in (0, 1) for e in eps):
            raise DomainError(f"smoothing entries must be 0 or 1: {self.eps}")
        object.__setattr__(self, "eps", eps)

    def __len__(self):
        return len(self.eps)

    def __iter__(self):
        return iter(self.eps)

    def __str__(self):
        return "".join(str(e) for e in self.eps)

    def eps_at(self, i: int) -> int:
        if 1 <= i <= len(self.eps):
            return self.eps[i - 1]
        return 0

    @classmethod
    def parse(cls, text: str) -> "Smoothing":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise DomainError(f"smoothing must be a bitstring, got {text!r}")
        return cls(tuple(int(c) for c in text))


def _check_positive(n: Expansion):
    if n.integer_part != 0 or not n.terms or any(t < 1 for t in n.terms) or n.terms[-1] < 2:
        raise DomainError(f"expected a positive expansion with last term >= 2, got {n}")


def is_allowable(n: Expansion, s: Smoothing) -> bool:
    if len(n) != len(s):
        raise LengthMismatch(f"expansion has {len(n)} terms, smoothing has {len(s)} bits")
    for i in range(1, len(n) + 1):
        e, prev, nxt = s.eps_at(i), s.eps_at(i - 1), s.eps_at(i + 1)
        if e == 1 and (prev or nxt):
            return False
        if n[i - 1] == 1 and e == 0 and not (prev or nxt):
            return False
    return True


def enumerate_allowable(n: Expansion) -> list[Smoothing]:
    """All allowable smoothings of ``n``, lexicographic with 0 < 1."""
    _check_positive(n)
    out = []
    for bits in product((0, 1), repeat=len(n)):
        s = Smoothing(bits)
        if is_allowable(n, s):
            out.append(s)
    return out


def _groups(n: Expansion, s: Smoothing) -> list[list[int]]:
    """Term groups of the generated expansion, one group per twist."""
    groups = []
    sign = 1
    for i in range(1, len(n) + 1):
        ni = n[i - 1]
        if s.eps_at(i):
            # Applied for i = 1 too: the first twist smoothed vertically still
            # becomes an alternating run (trefoil (1) -> [-2, 2]).
            group = [(-2 if j % 2 == 0 else 2) for j in range(ni - 1)]
        else:
            group = [ni + s.eps_at(i - 1) + s.eps_at(i + 1)]
        groups.append([sign * t for t in group])
        if s.eps_at(i) and ni % 2:
            sign = -sign
    return groups


def generate_expansion(n: Expansion, s: Smoothing) -> Expansion:
    """The expansion generated from the positive expansion ``n`` by ``s``.

    The integer part is chosen so the result evaluates exactly to the value
    of ``n``; the terms alone evaluate to it modulo 1.
    """
    _check_positive(n)
    if not is_allowable(n, s):
        raise NotAllowable(f"smoothing {s} is not allowable for {n}")
    terms = tuple(t for g in _groups(n, s) for t in g)
    shift = cf_value(n) - cf_value(Expansion(terms))
    assert shift.denominator == 1, (n, s, terms)
    return Expansion(terms, int(shift))
