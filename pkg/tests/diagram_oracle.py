"""Independent slope oracle built from an explicit 4-plat diagram.

The standard diagram of [n1, ..., nk] is drawn as a 4-strand plat: twist i is
n_i crossings between positions (2, 3) for odd i and (1, 2) for even i, with
generator signs alternating so the diagram is alternating. The knot is traced
to orient every crossing. A state surface's boundary slope is then twice the
sum of crossing signs over crossings whose smoothing disagrees with the
oriented (Seifert) smoothing. Horizontal smoothing is the turn-back one.

Nothing here touches continued fractions beyond reading the twist counts.
"""
from fractions import Fraction

import numpy as np


def _crossings(n):
    out = []  # (twist index, left position, generator sign)
    for i, ni in enumerate(n, start=1):
        pos, g = (2, 1) if i % 2 else (1, -1)
        out.extend((i, pos, g) for _ in range(ni))
    return out


def _closures(k):
    top = {1: 2, 2: 1, 3: 4, 4: 3}
    bottom = dict(top) if k % 2 else {1: 4, 4: 1, 2: 3, 3: 2}
    return top, bottom


def trace(n):
    """Return (component count, per-crossing (sign, parallel) list, arc data)."""
    cr = _crossings(n)
    T = len(cr)
    top, bottom = _closures(len(n))
    # direction[c] records (dir of strand entering from top-left, from top-right)
    dirs = [[None, None] for _ in range(T)]
    visited = set()
    components = 0
    for start in range(1, 5):
        if (0, start) in visited:
            continue
        components += 1
        t, p, down = 0, start, True
        while True:
            if down:
                visited.add((t, p))
                if t == T:
                    p = bottom[p]
                    down = False
                    continue
                _, j, _ = cr[t]
                if p in (j, j + 1):
                    dirs[t][p - j] = 1
                    p = j + 1 if p == j else j
                t += 1
            else:
                if t == 0:
                    visited.add((0, p))
                    p = top[p]
                    down = True
                    if (0, p) in visited:
                        break
                    continue
                _, j, _ = cr[t - 1]
                if p in (j, j + 1):
                    # arriving from below at position p; it left the top at the other slot
                    q = j + 1 if p == j else j
                    dirs[t - 1][q - j] = -1
                    p = q
                t -= 1
    info = []
    for (twist, _, g), (da, db) in zip(cr, dirs):
        info.append((twist, g * da * db, da == db))
    return components, info


def twist_data(n):
    """Per twist: (crossing sign, oriented smoothing bit). Asserts uniformity."""
    comps, info = trace(n)
    assert comps == 1, f"{n} traced to {comps} components"
    data = {}
    for twist, sign, parallel in info:
        # Horizontal (0) is the turn-back smoothing in this drawing, so it is
        # the oriented one exactly when the two strands are antiparallel.
        entry = (sign, 1 if parallel else 0)
        assert data.setdefault(twist, entry) == entry, f"twist {twist} of {n} not uniform"
    return [data[i] for i in range(1, len(n) + 1)]


def state_slope(n, eps):
    return 2 * sum(
        ni * sign for ni, e, (sign, oriented) in zip(n, eps, twist_data(n)) if e != oriented
    )


def seifert_state(n):
    return tuple(o for _, o in twist_data(n))


def determinant(n):
    """|det| of the Fox colouring matrix; equals alpha for K(alpha, beta)."""
    cr = _crossings(n)
    T = len(cr)
    top, bottom = _closures(len(n))
    # arcs: union-find over segment nodes (t, p), broken at undercrossings
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    # segment (t, p) runs from level t to t+1 at position p (pre-crossing position at t)
    over_of = []
    for t, (_, j, g) in enumerate(cr):
        for p in range(1, 5):
            if p not in (j, j + 1):
                union(("s", t, p), ("s", t + 1, p))
        # the over strand continues through; for g=+1 the left strand is over
        over_in = j if g > 0 else j + 1
        over_out = j + 1 if over_in == j else j
        union(("s", t, over_in), ("s", t + 1, over_out))
        under_in = j + 1 if over_in == j else j
        under_out = j if under_in == j + 1 else j + 1
        over_of.append((("s", t, over_in), ("s", t, under_in), ("s", t + 1, under_out)))
    for p, q in top.items():
        union(("s", 0, p), ("s", 0, q))
    for p, q in bottom.items():
        union(("s", T, p), ("s", T, q))
    roots = sorted({find(("s", t, p)) for t in range(T + 1) for p in range(1, 5)}, key=str)
    index = {r: i for i, r in enumerate(roots)}
    M = np.zeros((T, len(roots)), dtype=object)
    for c, (o, a, b) in enumerate(over_of):
        M[c, index[find(o)]] += 2
        M[c, index[find(a)]] -= 1
        M[c, index[find(b)]] -= 1
    minor = [[Fraction(int(x)) for x in row[1:]] for row in M[1:]]
    return abs(_det(minor))


def _det(a):
    a = [row[:] for row in a]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, size):
                    a[r][c] -= factor * a[col][c]
    return det
