"""
The seminorm on a grid
======================

The seminorm is piecewise linear with a break along every boundary slope, so a
numpy grid evaluation shows its shape at a glance.
"""

from fractions import Fraction

import numpy as np

from twobridge.surface import seminorm_grid

r = np.arange(-4, 5)
P, Q = np.meshgrid(r, r)

for f in (Fraction(1, 3), Fraction(2, 5)):
    H = seminorm_grid(f, P, Q)
    print(f)
    print(H[::-1])  # q increases upward

# The value at the meridian (1, 0) is always (alpha - 1) / 2.
for f in (Fraction(1, 3), Fraction(8, 19), Fraction(82, 429)):
    print(f, seminorm_grid(f, np.array([1]), np.array([0]))[0], (f.denominator - 1) // 2)
