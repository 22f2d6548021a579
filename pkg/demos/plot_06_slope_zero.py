"""
Slope zero without orientability
================================

An orientable surface is a Seifert surface, so its slope is 0. The converse
fails. 8/19 with smoothing 0100 is non-orientable, yet its slope is 0.
"""

from collections import Counter
from fractions import Fraction
from math import gcd

from twobridge import build_surfaces

f = Fraction(8, 19)
for s in build_surfaces(f):
    print(s.eps, s.m, s.slope, s.orientable)

# How common is this?
tally = Counter()
for a in range(3, 100, 2):
    for b in range(1, a):
        if gcd(a, b) == 1:
            for s in build_surfaces(Fraction(b, a)):
                if s.slope == 0:
                    tally[s.orientable] += 1
print(tally)
