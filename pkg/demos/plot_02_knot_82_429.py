"""
A four-twist example
====================

82/429 has positive expansion [5,4,3,6]. No two adjacent twists may both be
vertical, so there are eight allowable smoothings.
"""

from fractions import Fraction

from twobridge import build_surfaces, positive_expansion
from twobridge.smoothing import Smoothing, enumerate_allowable, generate_expansion

f = Fraction(82, 429)
n = positive_expansion(f)
print(n, len(enumerate_allowable(n)))

# One vertical twist in the second slot turns 4 into the block -2, 2, -2 and
# bumps its neighbours by one.
print(generate_expansion(n, Smoothing.parse("0100")))

# Weight is (gamma + product of deltas) / 2; gamma is -1 for the one
# orientable surface and 0 otherwise.
for s in build_surfaces(f):
    print(s.eps, s.deltas, s.orientable, s.weight, s.slope)
