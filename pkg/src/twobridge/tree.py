"""Basic Serre trees for essential surfaces, and the angle actions on them.

A basic tree is kept as a skeleton: the anchor vertices, one subtree per
twist attached at an anchor with one two-edge branch per unit of valence,
and the coincidences between linear-tree ends and neighbouring branches.
Axis-end labels are not modelled.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from math import prod

from .arith import Expansion
from .errors import IndexOutOfRange, IntegralityViolation, NotAllowable
from .smoothing import Smoothing, generate_expansion, is_allowable
from .surface import is_orientable

__all__ = [
    "Kind",
    "Case",
    "TwistSubtree",
    "Attachment",
    "Overlap",
    "BasicTree",
    "classify_twist_subtree",
    "assemble_basic_tree",
    "weight_from_tree",
    "enumerate_actions",
    "export_dot",
    "parse_dot",
]


class Kind(str, Enum):
    LINEAR = "linear"
    PARASOL = "parasol"


class Case(str, Enum):
    C1 = "C1"
    C2A = "C2a"
    C2B = "C2b"
    C3 = "C3"


@dataclass(frozen=True)
class TwistSubtree:
    index: int
    kind: Kind
    case: Case | None
    valence: int

    @property
    def label(self) -> str:
        kind = self.kind.value if self.case is None else f"{self.kind.value} {self.case.value}"
        return f"T{self.index} {kind} v={self.valence}"


@dataclass(frozen=True)
class Attachment:
    """A twist subtree placed in the basic tree.

    ``branches[j]`` holds the vertex names one and two units out along
    branch ``j``. For a linear subtree branch 0 is the end toward the
    previous twist and branch 1 the end toward the next; for a parasol
    branch 0 faces the previous twist and branch 1 the next.
    """

    subtree: TwistSubtree
    anchor: str
    branches: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Overlap:
    """Linear-tree end ``end`` of twist ``linear`` coincides with
    ``branch`` of the subtree of twist ``partner``."""

    linear: int
    end: int
    partner: int
    branch: int
    along_segment: bool


@dataclass(frozen=True)
class BasicTree:
    n: Expansion
    eps: Smoothing
    anchors: tuple[str, ...]
    subtrees: tuple[Attachment, ...]
    overlaps: tuple[Overlap, ...] = field(default=())

    @property
    def valences(self) -> tuple[int, ...]:
        return tuple(a.subtree.valence for a in self.subtrees)

    @property
    def is_point(self) -> bool:
        return self.anchors == ("P",)

    def edges(self) -> set[tuple[str, str]]:
        out = set()
        if not self.is_point:
            out |= {("O", "PA"), ("O", "PB")}
        for att in self.subtrees:
            for d1, d2 in att.branches:
                out.add(tuple(sorted((att.anchor, d1))))
                out.add(tuple(sorted((d1, d2))))
        return out

    def vertex_labels(self) -> dict[str, str]:
        labels = {a: a for a in self.anchors}
        owners = {f"T{att.subtree.index}": att.subtree.label for att in self.subtrees}
        for u, v in self.edges():
            for name in (u, v):
                if name not in labels:
                    labels[name] = owners[name.split(".", 1)[0]]
        return labels

    def to_record(self) -> dict:
        return {
            "n": list(self.n.terms),
            "eps": str(self.eps),
            "anchors": list(self.anchors),
            "subtrees": [
                {
                    "index": a.subtree.index,
                    "kind": a.subtree.kind.value,
                    "case": a.subtree.case.value if a.subtree.case else None,
                    "valence": a.subtree.valence,
                    "anchor": a.anchor,
                    "branches": [list(b) for b in a.branches],
                }
                for a in self.subtrees
            ],
            "overlaps": [
                {
                    "linear": o.linear,
                    "end": o.end,
                    "partner": o.partner,
                    "branch": o.branch,
                    "along_segment": o.along_segment,
                }
                for o in self.overlaps
            ],
        }


_VALENCE_SHIFT = {Case.C1: 0, Case.C2A: 1, Case.C2B: 1, Case.C3: 2}


def classify_twist_subtree(n: Expansion, s: Smoothing, i: int) -> TwistSubtree:
    if not 1 <= i <= len(n):
        raise IndexOutOfRange(f"twist index {i} outside 1..{len(n)}")
    if not is_allowable(n, s):
        raise NotAllowable(f"smoothing {s} is not allowable for {n}")
    if s.eps_at(i):
        return TwistSubtree(i, Kind.LINEAR, None, 2)
    before, after = s.eps_at(i - 1), s.eps_at(i + 1)
    case = {(0, 0): Case.C1, (1, 0): Case.C2A, (0, 1): Case.C2B, (1, 1): Case.C3}[before, after]
    return TwistSubtree(i, Kind.PARASOL, case, n[i - 1] + _VALENCE_SHIFT[case])


def _origin_side(i: int, s: Smoothing) -> str:
    # Odd origins start in A, even in B; a vertical twist moves to the other set.
    odd = i % 2 == 1
    return "A" if odd != bool(s.eps_at(i)) else "B"


def assemble_basic_tree(n: Expansion, s: Smoothing) -> BasicTree:
    if not is_allowable(n, s):
        raise NotAllowable(f"smoothing {s} is not allowable for {n}")
    k = len(n)
    subtrees = [classify_twist_subtree(n, s, i) for i in range(1, k + 1)]
    sides = [_origin_side(i, s) for i in range(1, k + 1)]
    point = len(set(sides)) == 1
    anchors = ("P",) if point else ("PA", "O", "PB")

    def anchor(i):
        return "P" if point else "P" + sides[i - 1]

    def opposite(i):
        return "PB" if sides[i - 1] == "A" else "PA"

    branches = {
        t.index: [(f"T{t.index}.b{j}.d1", f"T{t.index}.b{j}.d2") for j in range(t.valence)]
        for t in subtrees
    }
    overlaps = []
    linear = [t.index for t in subtrees if t.kind is Kind.LINEAR]

    def share(j, preferred, names):
        # A parasol has at most one branch along a given path; reuse it if present.
        if names in branches[j]:
            return branches[j].index(names)
        branches[j][preferred] = names
        return preferred

    for i in linear:
        seg_end = None
        if not point:
            # The end carrying a generator from the opposite origin set runs
            # along the segment; find the nearest such subtree on each side.
            hits = []
            for end, step in ((1, 1), (0, -1)):
                j = i + step
                while 1 <= j <= k and sides[j - 1] == sides[i - 1]:
                    j += step
                if 1 <= j <= k:
                    hits.append((abs(j - i), end, j))
            dist, seg_end, target = min(hits, key=lambda h: (h[0], -h[1]))
            branches[i][seg_end] = ("O", opposite(i))
            tb = share(target, 0 if target > i else 1, ("O", anchor(i)))
            overlaps.append(Overlap(i, seg_end, target, tb, True))
        for end, j in ((0, i - 1), (1, i + 1)):
            if 1 <= j <= k:
                pb = share(j, 1 if j < i else 0, branches[i][end])
                overlaps.append(Overlap(i, end, j, pb, end == seg_end))

    if not point:
        # Case 1 parasols put R at the other anchor: their first branch is the segment.
        for t in subtrees:
            on_segment = ("O", opposite(t.index))
            if t.case is Case.C1 and on_segment not in branches[t.index]:
                branches[t.index][0] = on_segment

    attachments = tuple(
        Attachment(t, anchor(t.index), tuple(branches[t.index])) for t in subtrees
    )
    overlaps.sort(key=lambda o: (o.linear, o.end, o.partner, o.branch))
    return BasicTree(n, s, anchors, attachments, tuple(overlaps))


def _check_gamma(t: BasicTree, m: Expansion | None) -> int:
    all_even = all(v % 2 == 0 for v in t.valences)
    if m is not None and is_orientable(m) != all_even:
        raise IntegralityViolation(
            f"valence parity disagrees with orientability of {m} for {t.eps}"
        )
    return -1 if all_even else 0


def weight_from_tree(t: BasicTree, m: Expansion | None = None) -> int:
    """Weight from subtree valences: (gamma + prod(v_i - 1)) / 2.

    ``gamma`` is -1 for an orientable surface; when ``m`` is omitted it is
    read off the valences (all even iff orientable).
    """
    if m is None:
        m = generate_expansion(t.n, t.eps)
    total = _check_gamma(t, m) + prod(v - 1 for v in t.valences)
    if total % 2:
        raise IntegralityViolation(f"odd weight numerator {total} for {t.eps}")
    return total // 2


def enumerate_actions(t: BasicTree, m: Expansion | None = None) -> list[tuple[int, ...]]:
    """Angle-multiplier tuples up to reflection, reducible action removed.

    Multiplier ``j`` on subtree ``i`` scales its branch angle by ``j``. The
    reflection sends ``j`` to ``v_i - j``; of each pair the lexicographically
    smaller tuple is kept. The all-pi tuple is the reflection's only fixed
    point and is dropped.
    """
    if m is None:
        m = generate_expansion(t.n, t.eps)
    _check_gamma(t, m)
    vs = t.valences
    out = []
    for mults in product(*(range(1, v) for v in vs)):
        mirror = tuple(v - j for v, j in zip(vs, mults))
        if mults < mirror:
            out.append(mults)
    return out


def export_dot(t: BasicTree) -> str:
    """Deterministic undirected DOT text; vertices and edges sorted by name."""
    labels = t.vertex_labels()
    lines = [f'graph "basic_tree_{t.n}_{t.eps}" {{']
    for name in sorted(labels):
        lines.append(f'  "{name}" [label="{labels[name]}"];')
    for u, v in sorted(t.edges()):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*"([^"]+)"\s*\[label="([^"]*)"\];\s*$')
_EDGE = re.compile(r'^\s*"([^"]+)"\s*--\s*"([^"]+)";\s*$')


def parse_dot(text: str) -> tuple[dict[str, str], set[tuple[str, str]]]:
    """Read back the subset of DOT written by :func:`export_dot`."""
    labels, edges = {}, set()
    for line in text.splitlines():
        if m := _NODE.match(line):
            labels[m.group(1)] = m.group(2)
        elif m := _EDGE.match(line):
            edges.add(tuple(sorted((m.group(1), m.group(2)))))
    return labels, edges
